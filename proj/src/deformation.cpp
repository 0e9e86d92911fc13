#include "tw4p/deformation.hpp"

#include <cmath>
#include <unordered_map>

namespace tw4p {

namespace {

double binom(int n, int k) {
  double r = 1.0;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

// Falling factorial n!/(n-l)!.
double falling(int n, int l) {
  double r = 1.0;
  for (int j = 0; j < l; ++j) r *= (n - j);
  return r;
}

// Shared machinery of the recursion: memoized t-derivatives of the word
// products x_{i_1}...x_{i_l} and the endpoint-matrix derivatives built from
// them.
class SeriesBuilder {
 public:
  SeriesBuilder(const std::vector<std::array<LaurentPoly, 3>>& x, int max_depth)
      : x_(x), widx_(max_depth) {
    pauli_.resize(widx_.total);
    for (int level = 1; level <= max_depth; ++level) {
      size_t count = 1;
      for (int l = 0; l < level; ++l) count *= 3;
      for (size_t i = 0; i < count; ++i)
        pauli_[widx_.level_offset[static_cast<size_t>(level)] + i] = pauli_word(widx_.word(level, i));
    }
  }

  // m-th derivative at t=0 of the product of parameters along the word at
  // (level, idx). Requires x_ filled to order >= m.
  const LaurentPoly& product_derivative(int level, size_t idx, int m) {
    if (level == 1) return x_[static_cast<size_t>(m)][idx];
    const size_t key = (widx_.level_offset[static_cast<size_t>(level)] + idx) * 8 + static_cast<size_t>(m);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    size_t pw = 1;
    for (int l = 0; l < level - 1; ++l) pw *= 3;
    const size_t head = idx / pw;
    const size_t tail = idx % pw;
    LaurentPoly acc;
    for (int k = 0; k <= m; ++k)
      acc += binom(m, k) * (x_[static_cast<size_t>(k)][head] * product_derivative(level - 1, tail, m - k));
    return memo_.emplace(key, std::move(acc)).first->second;
  }

  // Order-n derivative of the endpoint matrix: sum over word lengths l in
  // [l_min, n] of n!/(n-l)! sum_w (d/dt)^{n-l}[x_w] m_w Omega_w(endpoint).
  Mat2L endpoint_matrix_derivative(int n, int l_min, const OmegaTable& table) {
    Mat2L acc;
    for (int level = std::max(l_min, 1); level <= n; ++level) {
      const double coef = falling(n, level);
      size_t count = 1;
      for (int l = 0; l < level; ++l) count *= 3;
      const size_t off = widx_.level_offset[static_cast<size_t>(level)];
      for (size_t i = 0; i < count; ++i) {
        const cplx om = coef * table.value(widx_.word(level, i));
        const Mat2c& pw = pauli_[off + i];
        const LaurentPoly& poly = product_derivative(level, i, n - level);
        if (poly.zero()) continue;
        // Pauli words are diagonal or antidiagonal; skip the zero entries.
        if (pw.a != cplx(0.0)) acc.a += (om * pw.a) * poly;
        if (pw.b != cplx(0.0)) acc.b += (om * pw.b) * poly;
        if (pw.c != cplx(0.0)) acc.c += (om * pw.c) * poly;
        if (pw.d != cplx(0.0)) acc.d += (om * pw.d) * poly;
      }
    }
    return acc;
  }

 private:
  const std::vector<std::array<LaurentPoly, 3>>& x_;
  WordIndex widx_;
  std::vector<Mat2c> pauli_;
  std::unordered_map<size_t, LaurentPoly> memo_;
};

LaurentPoly leibniz_p_pairs(const std::vector<Mat2L>& pfull, int n1) {
  // sum_{k=1}^{n1-1} C(n1,k) (P11^(k) P21^(n1-k) - P12^(k) P22^(n1-k))
  LaurentPoly acc;
  for (int k = 1; k < n1; ++k) {
    const auto& pk = pfull[static_cast<size_t>(k)];
    const auto& pm = pfull[static_cast<size_t>(n1 - k)];
    acc += binom(n1, k) * (pk.a * pm.c - pk.b * pm.d);
  }
  return acc;
}

LaurentPoly leibniz_q_pairs(const std::vector<Mat2L>& qfull, int n1) {
  // sum_{k=1}^{n1-1} C(n1,k) (Q11^(k) Q21^(n1-k) + Q12^(k) Q22^(n1-k))
  LaurentPoly acc;
  for (int k = 1; k < n1; ++k) {
    const auto& qk = qfull[static_cast<size_t>(k)];
    const auto& qm = qfull[static_cast<size_t>(n1 - k)];
    acc += binom(n1, k) * (qk.a * qm.c + qk.b * qm.d);
  }
  return acc;
}

}  // namespace

std::array<LaurentPoly, 3> first_order(const CentralValues& cv, cplx omega21_at_1, cplx omega31_at_i) {
  const double im21 = omega21_at_1.imag();
  const double im31 = omega31_at_i.imag();
  const cplx c4 = 4.0 * kI / kPi;

  std::array<LaurentPoly, 3> xp;
  xp[0] = (c4 * (im21 + im31)) * pos_part(cv.xbar[1] * cv.xbar[2]);
  xp[1] = (-c4 * im31) * pos_part(cv.xbar[0] * cv.xbar[2]);
  xp[2] = (-c4 * im21) * pos_part(cv.xbar[0] * cv.xbar[1]);

  cplx xsum = 0.0, ysum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const auto& xb = cv.xbar[static_cast<size_t>(j)];
    xsum += xb.coeff(-1) * xp[static_cast<size_t>(j)].coeff(1);
    ysum += xb.coeff(-1) * xp[static_cast<size_t>(j)].coeff(2) + xb.coeff(0) * xp[static_cast<size_t>(j)].coeff(1);
  }
  const double rho = cv.rho, r4 = cv.r2 * cv.r2;
  for (int j = 0; j < 3; ++j) {
    const auto& xb = cv.xbar[static_cast<size_t>(j)];
    const cplx c0 = (-1.0 / (rho * r4)) * ((xb.coeff(0) / rho) * xsum - 2.0 * rho * xb.coeff(-1) * ysum);
    xp[static_cast<size_t>(j)] += LaurentPoly::constant(c0);
  }
  return xp;
}

Mat2L pq_matrix_derivative(const DerivativeSeries& series, const OmegaTable& table, int n, bool drop_top) {
  if (table.depth < n + 1) throw std::invalid_argument("pq_matrix_derivative: table depth insufficient");
  if (series.order < (drop_top ? n - 1 : n))
    throw std::invalid_argument("pq_matrix_derivative: series not filled to the required order");
  SeriesBuilder b(series.x, n + 1);
  return b.endpoint_matrix_derivative(n + 1, drop_top ? 2 : 1, table);
}

DerivativeSeries derive(const ModuliConfig& cfg, int eN, const OmegaTable& tbl1, const OmegaTable& tbli) {
  if (eN < 1 || eN > 5) throw std::invalid_argument("derive: order must be in 1..5");
  if (tbl1.depth < eN + 1 || tbli.depth < eN + 1)
    throw std::invalid_argument("derive: table depth insufficient for requested order");
  if (std::sqrt(cfg.r2()) < kMinRadius)
    throw std::runtime_error("derive: r below minimum radius; use blow-up diagnostics instead");

  DerivativeSeries s{cfg, central_values(cfg), 0, {}};
  s.x.resize(static_cast<size_t>(eN) + 1);
  s.x[0] = s.cv.xbar;

  const LaurentPoly p1 = s.cv.xbar[0].shifted(1);
  const LaurentPoly p2 = s.cv.xbar[1].shifted(1);
  const LaurentPoly p3 = s.cv.xbar[2].shifted(1);
  std::array<std::array<cplx, 3>, 3> sys;
  for (int m = 0; m < 3; ++m) {
    sys[static_cast<size_t>(m)] = {p1.coeff(m), p2.coeff(m), p3.coeff(m)};
  }

  SeriesBuilder builder(s.x, eN + 1);
  std::vector<Mat2L> pfull(static_cast<size_t>(eN) + 1), qfull(static_cast<size_t>(eN) + 1);

  for (int n = 1; n <= eN; ++n) {
    // Endpoint matrices at order n use x up to order n-1 only.
    pfull[static_cast<size_t>(n)] = builder.endpoint_matrix_derivative(n, 1, tbl1);
    qfull[static_cast<size_t>(n)] = builder.endpoint_matrix_derivative(n, 1, tbli);

    const Mat2L plow_m = builder.endpoint_matrix_derivative(n + 1, 2, tbl1);
    const Mat2L qlow_m = builder.endpoint_matrix_derivative(n + 1, 2, tbli);
    const LaurentPoly p_low = leibniz_p_pairs(pfull, n + 1) + plow_m.c - plow_m.b;
    const LaurentPoly q_low = kI * leibniz_q_pairs(qfull, n + 1) + kI * (qlow_m.c + qlow_m.b);

    const double c = 1.0 / (2.0 * kPi * (n + 1));
    const LaurentPoly x3p = cplx(c) * (neg_star(p_low) - pos_part(p_low));
    const LaurentPoly x2p = cplx(c) * (neg_star(q_low) - pos_part(q_low));

    LaurentPoly klow;
    for (int j = 0; j < 3; ++j)
      for (int k = 1; k <= n - 1; ++k)
        klow += binom(n, k) * (s.x[static_cast<size_t>(k)][static_cast<size_t>(j)] *
                               s.x[static_cast<size_t>(n - k)][static_cast<size_t>(j)]);

    const LaurentPoly rhs = cplx(-0.5) * klow.shifted(1) - p2 * x2p - p3 * x3p;
    const auto [quot, rem] = divmod(rhs, p1);
    const LaurentPoly x1p = pos_part(quot);

    const LaurentPoly rhs2 = rhs - p1 * x1p;
    const std::array<cplx, 3> consts = cramer3(sys, {rhs2.coeff(0), rhs2.coeff(1), rhs2.coeff(2)});

    s.x[static_cast<size_t>(n)][0] = LaurentPoly::constant(consts[0]) + x1p;
    s.x[static_cast<size_t>(n)][1] = LaurentPoly::constant(consts[1]) + x2p;
    s.x[static_cast<size_t>(n)][2] = LaurentPoly::constant(consts[2]) + x3p;

    // Consistency of the full equation beyond the solved coefficients.
    const LaurentPoly full = p1 * s.x[static_cast<size_t>(n)][0] + consts[1] * p2 + consts[2] * p3 - rhs;
    const double scale = std::max(rhs.norm_inf(), 1.0);
    double high = 0.0;
    if (!full.zero())
      for (int k = 3; k <= full.hi(); ++k) high = std::max(high, std::abs(full.coeff(k)));
    if (!full.zero() && full.lo() < 0) high = std::max(high, neg_part(full).norm_inf());
    if (high > 1e-8 * scale) throw std::runtime_error("derive: order-n inconsistency in the recursion");

    for (int j = 0; j < 3; ++j) {
      const LaurentPoly& xnj = s.x[static_cast<size_t>(n)][static_cast<size_t>(j)];
      if (!xnj.zero() && (xnj.lo() < 0 || xnj.deg() > n + 1))
        throw std::runtime_error("derive: order-n inconsistency (degree bound violated)");
    }
    s.order = n;
  }
  return s;
}

std::array<cplx, 3> eval_x(const DerivativeSeries& series, double t, cplx lambda) {
  if (lambda == cplx(0.0)) throw std::invalid_argument("eval_x: lambda = 0");
  std::array<cplx, 3> out{};
  double tn_over_nfact = 1.0;
  for (int n = 0; n <= series.order; ++n) {
    if (n > 0) tn_over_nfact *= t / n;
    for (int j = 0; j < 3; ++j)
      out[static_cast<size_t>(j)] +=
          tn_over_nfact * series.x[static_cast<size_t>(n)][static_cast<size_t>(j)].eval(lambda);
  }
  return out;
}

LaxWitness lax_solve(const DerivativeSeries& series) {
  if (series.order < 1) throw std::invalid_argument("lax_solve: series order >= 1 required");
  const auto a_set = residue_pattern(series.x[0]);
  const auto ap_set = residue_pattern(series.x[1]);
  const Mat2L& a = a_set[0];
  const Mat2L& ap = ap_set[0];

  // X = (alpha beta; gamma -alpha) with polynomial entries of degree <= 3.
  // [A, X] = (g*gamma - h*beta, 2f*beta - 2g*alpha; 2h*alpha - 2f*gamma, ...)
  // with A = (f g; h -f).
  const int dx = 3;
  const int ncoef = dx + 1;
  const int lo = -1, hi = dx + 1;
  const int nrows_per_eq = hi - lo + 1;
  std::vector<std::vector<cplx>> mat(static_cast<size_t>(3 * nrows_per_eq),
                                     std::vector<cplx>(static_cast<size_t>(3 * ncoef), 0.0));
  std::vector<cplx> rhs(static_cast<size_t>(3 * nrows_per_eq), 0.0);

  const LaurentPoly& f = a.a;
  const LaurentPoly& g = a.b;
  const LaurentPoly& h = a.c;
  // Equation row block e, coefficient degree k: fill contributions of the
  // unknown coefficient (var block v, power m).
  auto put = [&](int e, const LaurentPoly& weight, int v) {
    for (int m = 0; m < ncoef; ++m) {
      for (int k = lo; k <= hi; ++k) {
        const cplx w = weight.coeff(k - m);
        if (w != cplx(0.0))
          mat[static_cast<size_t>(e * nrows_per_eq + (k - lo))][static_cast<size_t>(v * ncoef + m)] += w;
      }
    }
  };
  // entry (1,1): g*gamma - h*beta = f'
  put(0, g, 2);
  put(0, -h, 1);
  // entry (1,2): 2f*beta - 2g*alpha = g'
  put(1, 2.0 * f, 1);
  put(1, -2.0 * g, 0);
  // entry (2,1): 2h*alpha - 2f*gamma = h'
  put(2, 2.0 * h, 0);
  put(2, -2.0 * f, 2);

  const LaurentPoly rhs_polys[3] = {ap.a, ap.b, ap.c};
  for (int e = 0; e < 3; ++e)
    for (int k = lo; k <= hi; ++k)
      rhs[static_cast<size_t>(e * nrows_per_eq + (k - lo))] = rhs_polys[e].coeff(k);

  const std::vector<cplx> sol = lstsq(mat, rhs);
  auto poly_of = [&](int v) {
    std::vector<cplx> c(static_cast<size_t>(ncoef));
    for (int m = 0; m < ncoef; ++m) c[static_cast<size_t>(m)] = sol[static_cast<size_t>(v * ncoef + m)];
    return LaurentPoly{0, std::move(c)};
  };
  LaxWitness w;
  const LaurentPoly alpha = poly_of(0), beta = poly_of(1), gamma = poly_of(2);
  w.X = {alpha, beta, gamma, -alpha};
  w.residual = norm_inf(ap - commutator(a, w.X));
  return w;
}

double unit_constraint_residual(const DerivativeSeries& series) {
  double worst = 0.0;
  for (int n = 0; n <= series.order; ++n) {
    LaurentPoly acc;
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k <= n; ++k)
        acc += binom(n, k) * (series.x[static_cast<size_t>(k)][static_cast<size_t>(j)] *
                              series.x[static_cast<size_t>(n - k)][static_cast<size_t>(j)]);
    if (n == 0) acc -= LaurentPoly::constant(1.0);
    worst = std::max(worst, acc.norm_inf());
  }
  return worst;
}

}  // namespace tw4p
