#include "tw4p/monodromy.hpp"

#include <cmath>

#include "tw4p/rk45.hpp"

namespace tw4p {

namespace {

struct Chart {
  cplx z, dz;  // point and velocity at parameter s in [0,1]
};

Chart segment_chart(const PathSpec::Segment& seg, double s) {
  if (const auto* line = std::get_if<PathSpec::Line>(&seg)) {
    return {line->z0 + (line->z1 - line->z0) * s, line->z1 - line->z0};
  }
  const auto& arc = std::get<PathSpec::Arc>(seg);
  const double a = arc.angle0 + (arc.angle1 - arc.angle0) * s;
  const cplx e = std::exp(kI * a);
  return {arc.center + arc.radius * e, kI * arc.radius * (arc.angle1 - arc.angle0) * e};
}

}  // namespace

TransportResult transport(const ModuliConfig& cfg, const DerivativeSeries& series, double t, cplx lambda,
                          const PathSpec& path, double tol) {
  if (path.min_puncture_distance(cfg) < kPathMargin)
    throw std::runtime_error("transport: path-singularity (path too close to a puncture)");
  const auto xv = eval_x(series, t, lambda);
  const auto res = residue_pattern(xv);
  std::array<Mat2c, 4> tres;
  for (int k = 0; k < 4; ++k) {
    const Mat2c& a = res[static_cast<size_t>(k)];
    tres[static_cast<size_t>(k)] = {t * a.a, t * a.b, t * a.c, t * a.d};
  }
  const auto punct = cfg.punctures();

  std::vector<cplx> y = {1.0, 0.0, 0.0, 1.0};
  std::vector<double> err(4, 0.0);
  OdeOptions opt;
  opt.atol = tol;
  opt.rtol = tol;

  for (const auto& seg : path.segments) {
    auto rhs = [&](double s, const std::vector<cplx>& st, std::vector<cplx>& dy) {
      const Chart c = segment_chart(seg, s);
      Mat2c b{};
      for (int k = 0; k < 4; ++k) {
        const cplx w = c.dz / (c.z - punct[static_cast<size_t>(k)]);
        const Mat2c& r = tres[static_cast<size_t>(k)];
        b.a += w * r.a;
        b.b += w * r.b;
        b.c += w * r.c;
        b.d += w * r.d;
      }
      // d Phi = Phi * b, Phi stored row-major.
      dy[0] = st[0] * b.a + st[1] * b.c;
      dy[1] = st[0] * b.b + st[1] * b.d;
      dy[2] = st[2] * b.a + st[3] * b.c;
      dy[3] = st[2] * b.b + st[3] * b.d;
    };
    rk45_integrate(rhs, y, 0.0, 1.0, opt, &err);
  }

  TransportResult r;
  r.value = {y[0], y[1], y[2], y[3]};
  r.lambda = lambda;
  r.t = t;
  r.det_residual = std::abs(r.value.det() - 1.0);
  r.err_estimate = err[0] + err[1] + err[2] + err[3];
  return r;
}

TraceSet traces(const Mat2c& P, const Mat2c& Q) {
  TraceSet tr;
  tr.p = P.a * P.c - P.b * P.d;
  tr.q = kI * (Q.a * Q.c + Q.b * Q.d);
  const cplx f1 = P.d * Q.a + P.b * Q.c;
  const cplx f2 = P.d * Q.b + P.b * Q.d;
  const cplx f3 = P.c * Q.a + P.a * Q.c;
  const cplx f4 = P.c * Q.b + P.a * Q.d;
  tr.r = 0.5 * kI * (f1 * f1 + f2 * f2 - f3 * f3 - f4 * f4);
  tr.s12 = 2.0 - 4.0 * tr.p * tr.p;
  tr.s23 = 2.0 - 4.0 * tr.q * tr.q;
  tr.s13 = 2.0 - 4.0 * tr.r * tr.r;
  return tr;
}

std::pair<cplx, cplx> fricke_factors(const TraceSet& tr, double t) {
  const double s = 2.0 * std::cos(2.0 * kPi * t);
  const cplx base = s * s + 4.0 * (tr.p * tr.p + tr.q * tr.q + tr.r * tr.r - 1.0);
  const cplx pqr = 8.0 * tr.p * tr.q * tr.r;
  return {base - pqr, base + pqr};
}

MonodromyReport reality_residual(const ModuliConfig& cfg, const DerivativeSeries& series, double t,
                                 const std::vector<cplx>& lambda_grid, double tol) {
  MonodromyReport rep;
  rep.t = t;
  rep.lambdas = lambda_grid;
  const PathSpec to1 = PathSpec::segment(0.0, 1.0);
  const PathSpec toi = PathSpec::segment(0.0, kI);

  auto traces_at = [&](cplx lambda) {
    const Mat2c P = transport(cfg, series, t, lambda, to1, tol).value;
    const Mat2c Q = transport(cfg, series, t, lambda, toi, tol).value;
    return traces(P, Q);
  };

  rep.min_abs_q1 = 1e300;
  for (cplx lambda : lambda_grid) {
    const TraceSet tr = traces_at(lambda);
    const TraceSet trm = traces_at(-lambda);  // f*(lambda) = conj(f(-lambda)) on |lambda|=1
    rep.p_res.push_back(std::abs(tr.p - std::conj(trm.p)));
    rep.q_res.push_back(std::abs(tr.q - std::conj(trm.q)));
    rep.r_res.push_back(std::abs(tr.r - std::conj(trm.r)));
    const auto xv = eval_x(series, t, lambda);
    rep.k_res.push_back(std::abs(xv[0] * xv[0] + xv[1] * xv[1] + xv[2] * xv[2] - 1.0));
    const auto [q1, q2] = fricke_factors(tr, t);
    rep.q1.push_back(q1);
    rep.q2.push_back(q2);
    rep.max_p = std::max(rep.max_p, rep.p_res.back());
    rep.max_q = std::max(rep.max_q, rep.q_res.back());
    rep.max_r = std::max(rep.max_r, rep.r_res.back());
    rep.max_k = std::max(rep.max_k, rep.k_res.back());
    rep.max_q2 = std::max(rep.max_q2, std::abs(q2));
    rep.min_abs_q1 = std::min(rep.min_abs_q1, std::abs(q1));
  }
  return rep;
}

PathSpec loop_path(const ModuliConfig& cfg, int k) {
  if (k < 1 || k > 4) throw std::invalid_argument("loop_path: k in 1..4");
  const auto punct = cfg.punctures();
  const cplx pk = punct[static_cast<size_t>(k - 1)];
  double dmin = 1e300;
  for (int j = 0; j < 4; ++j)
    if (j != k - 1) dmin = std::min(dmin, std::abs(pk - punct[static_cast<size_t>(j)]));
  const double radius = std::min(0.3 * dmin, 0.5 * std::abs(pk));
  const double theta = std::arg(pk);
  const cplx q = pk - radius * pk / std::abs(pk);
  PathSpec path;
  path.segments.push_back(PathSpec::Line{0.0, q});
  path.segments.push_back(PathSpec::Arc{pk, radius, theta + kPi, theta + 3.0 * kPi});
  path.segments.push_back(PathSpec::Line{q, 0.0});
  return path;
}

Mat2c loop_monodromy(const ModuliConfig& cfg, const DerivativeSeries& series, double t, cplx lambda, int k,
                     double tol) {
  return transport(cfg, series, t, lambda, loop_path(cfg, k), tol).value;
}

}  // namespace tw4p
