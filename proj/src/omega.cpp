#include "tw4p/omega.hpp"

#include <cmath>

#include "tw4p/rk45.hpp"

namespace tw4p {

namespace {

double point_segment_distance(cplx z, cplx a, cplx b) {
  const cplx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(z - a);
  double s = ((z - a) * std::conj(ab)).real() / len2;
  s = std::clamp(s, 0.0, 1.0);
  return std::abs(z - (a + s * ab));
}

cplx principal_log_checked(cplx z, const char* what) {
  if (z.real() <= 0.0 && std::abs(z.imag()) < 1e-14 * std::abs(z.real()))
    throw std::runtime_error(std::string("principal logarithm argument on the negative axis in ") + what);
  return std::log(z);
}

}  // namespace

double PathSpec::min_puncture_distance(const ModuliConfig& cfg) const {
  double d = 1e300;
  for (const Segment& seg : segments) {
    if (const auto* line = std::get_if<Line>(&seg)) {
      for (cplx pk : cfg.punctures()) d = std::min(d, point_segment_distance(pk, line->z0, line->z1));
    } else if (const auto* arc = std::get_if<Arc>(&seg)) {
      for (cplx pk : cfg.punctures()) {
        // Exact: distance from a circle of radius R to a point at distance c
        // from the center is |c - R| (full arcs; sampled for partial ones).
        const double c = std::abs(pk - arc->center);
        if (std::abs(arc->angle1 - arc->angle0) >= 2.0 * kPi - 1e-12) {
          d = std::min(d, std::abs(c - arc->radius));
        } else {
          const int n = 64;
          for (int k = 0; k <= n; ++k) {
            const double a = arc->angle0 + (arc->angle1 - arc->angle0) * k / n;
            d = std::min(d, std::abs(pk - (arc->center + arc->radius * std::exp(kI * a))));
          }
        }
      }
    }
  }
  return d;
}

OmegaTable omega_table(const ModuliConfig& cfg, cplx endpoint, int depth, double tol) {
  if (depth < 1 || depth > 6) throw std::runtime_error("omega_table: depth cap (1 <= depth <= 6)");
  const PathSpec path = PathSpec::segment(0.0, endpoint);
  if (path.min_puncture_distance(cfg) < kPathMargin)
    throw std::runtime_error("omega_table: path-singularity (segment too close to a puncture)");

  OmegaTable t{endpoint, depth, cfg.p, WordIndex(depth), {}, {}};
  std::vector<cplx> y(t.idx.total, 0.0);
  std::vector<double> err(t.idx.total, 0.0);

  const auto rhs = [&](double s, const std::vector<cplx>& state, std::vector<cplx>& dy) {
    const cplx z = endpoint * s;
    cplx w[3];
    for (int j = 1; j <= 3; ++j) w[j - 1] = omega_form(cfg, j, z) * endpoint;
    // Level 1: prefix is the empty word with value 1.
    for (size_t i = 0; i < 3; ++i) dy[i] = w[i];
    for (int level = 2; level <= depth; ++level) {
      const size_t off = t.idx.level_offset[static_cast<size_t>(level)];
      const size_t offp = t.idx.level_offset[static_cast<size_t>(level - 1)];
      size_t count = 1;
      for (int l = 0; l < level; ++l) count *= 3;
      for (size_t i = 0; i < count; ++i) dy[off + i] = state[offp + i / 3] * w[i % 3];
    }
  };

  OdeOptions opt;
  opt.atol = tol;
  opt.rtol = tol;
  rk45_integrate(rhs, y, 0.0, 1.0, opt, &err);
  t.values = std::move(y);
  t.errs = std::move(err);
  return t;
}

cplx omega21_closed(cplx p) {
  return 2.0 * kPi * kI * principal_log_checked((p * p - 1.0) / (2.0 * kI * p), "omega21");
}

cplx omega31_closed(cplx p) {
  return -2.0 * kPi * kI * principal_log_checked((p * p + 1.0) / (2.0 * p), "omega31");
}

ShuffleResidual shuffle_residual(const OmegaTable& table) {
  if (table.depth < 2) throw std::invalid_argument("shuffle_residual: depth >= 2 required");
  ShuffleResidual r;
  for (int j = 1; j <= 3; ++j) {
    for (int k = 1; k <= 3; ++k) {
      cplx sum = 0.0;
      for (const Word& w : shuffle(Word{j}, Word{k})) sum += table.value(w);
      r.depth2 = std::max(r.depth2, std::abs(table.value(Word{j}) * table.value(Word{k}) - sum));
    }
  }
  if (table.depth >= 3) {
    for (int j = 1; j <= 3; ++j) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 3; ++l) {
          cplx sum = 0.0;
          for (const Word& w : shuffle(Word{j}, Word{k, l})) sum += table.value(w);
          r.depth3 = std::max(r.depth3, std::abs(table.value(Word{j}) * table.value(Word{k, l}) - sum));
        }
      }
    }
  }
  return r;
}

double zeta3() {
  const int n0 = 400;
  double s = 0.0;
  for (int n = 1; n < n0; ++n) s += 1.0 / (static_cast<double>(n) * n * n);
  const double inv = 1.0 / n0;
  // Euler-Maclaurin tail from n0: sum_{n>=n0} n^-3.
  s += 0.5 * inv * inv + 0.5 * inv * inv * inv + 0.25 * inv * inv * inv * inv -
       inv * inv * inv * inv * inv * inv / 12.0;
  return s;
}

}  // namespace tw4p
