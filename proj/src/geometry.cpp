#include "tw4p/geometry.hpp"

#include <cmath>

namespace tw4p {

TwoForm4 TwoForm4::operator+(const TwoForm4& o) const {
  TwoForm4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.m[a][b] = m[a][b] + o.m[a][b];
  return r;
}

TwoForm4 TwoForm4::operator-(const TwoForm4& o) const {
  TwoForm4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.m[a][b] = m[a][b] - o.m[a][b];
  return r;
}

TwoForm4 operator*(cplx s, const TwoForm4& f) {
  TwoForm4 r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) r.m[a][b] = s * f.m[a][b];
  return r;
}

double TwoForm4::norm() const {
  double n = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) n = std::max(n, std::abs(m[a][b]));
  return n;
}

TwoForm4 wedge(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b) {
  TwoForm4 r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      r.m[i][j] = a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)] -
                  a[static_cast<size_t>(j)] * b[static_cast<size_t>(i)];
  return r;
}

Frame4 frame_mul(const Frame4& x, const Frame4& y) {
  Frame4 r{};
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) {
      cplx s = 0.0;
      for (size_t c = 0; c < 4; ++c) s += x[a][c] * y[c][b];
      r[a][b] = s;
    }
  return r;
}

double frame_dist(const Frame4& x, const Frame4& y) {
  double d = 0.0;
  for (size_t a = 0; a < 4; ++a)
    for (size_t b = 0; b < 4; ++b) d = std::max(d, std::abs(x[a][b] - y[a][b]));
  return d;
}

VarpiT0 varpi_t0(cplx u, cplx v) {
  if (u == cplx(0.0) && v == cplx(0.0)) throw std::invalid_argument("varpi_t0: (u,v) = (0,0)");
  const double r2 = std::norm(u) + std::norm(v);
  const double r6 = r2 * r2 * r2;
  const double rho = -std::sqrt(1.0 + 1.0 / (r2 * r2));
  const cplx ci = 32.0 * kPi * kI / (rho * r6);

  VarpiT0 f;
  f.wI.set(0, 1, ci * (r6 + std::norm(v)));
  f.wI.set(0, 3, -ci * std::conj(u) * v);
  f.wI.set(1, 2, ci * u * std::conj(v));
  f.wI.set(2, 3, ci * (r6 + std::norm(u)));

  f.wJ.set(0, 2, -32.0 * kPi * kI);
  f.wJ.set(1, 3, 32.0 * kPi * kI);

  f.wK.set(0, 2, cplx(-32.0 * kPi));
  f.wK.set(1, 3, cplx(-32.0 * kPi));

  f.vm1 = f.wJ + kI * f.wK;
  f.v0 = cplx(-2.0) * f.wI;
  f.v1 = cplx(-1.0) * (f.wJ - kI * f.wK);
  return f;
}

TwoForm4 varpi0_from_parameters(cplx u, cplx v) {
  const double r2 = std::norm(u) + std::norm(v);
  const double r6 = r2 * r2 * r2;
  const double rho = -std::sqrt(1.0 + 1.0 / (r2 * r2));
  const cplx x1m = u * v;
  const double x10 = rho * (std::norm(u) - std::norm(v));

  // Differentials in the coframe (du, dub, dv, dvb).
  const std::array<cplx, 4> dx2m = {-u, 0.0, v, 0.0};
  const std::array<cplx, 4> dx3m = {kI * u, 0.0, kI * v, 0.0};
  // d rho = -(1/(rho r^6)) d(r^2).
  const std::array<cplx, 4> dr2 = {std::conj(u), u, std::conj(v), v};
  const double drho_fac = -1.0 / (rho * r6);
  // x_{2,0} = rho (u vb + ub v), x_{3,0} = -i rho (u vb - ub v).
  const cplx s2 = u * std::conj(v) + std::conj(u) * v;
  const cplx s3 = -kI * (u * std::conj(v) - std::conj(u) * v);
  std::array<cplx, 4> dx20{}, dx30{};
  const std::array<cplx, 4> ds2 = {std::conj(v), v, std::conj(u), u};
  const std::array<cplx, 4> ds3 = {-kI * std::conj(v), kI * v, kI * std::conj(u), -kI * u};
  for (int a = 0; a < 4; ++a) {
    dx20[static_cast<size_t>(a)] = s2 * drho_fac * dr2[static_cast<size_t>(a)] + rho * ds2[static_cast<size_t>(a)];
    dx30[static_cast<size_t>(a)] = s3 * drho_fac * dr2[static_cast<size_t>(a)] + rho * ds3[static_cast<size_t>(a)];
  }

  const cplx pref = 32.0 * kPi / x1m;
  const TwoForm4 term1 = (-cplx(x10) / x1m) * wedge(dx2m, dx3m);
  const TwoForm4 term2 = wedge(dx20, dx3m);
  const TwoForm4 term3 = wedge(dx2m, dx30);
  return pref * (term1 + term2 + term3);
}

EHMetric eh_metric(cplx u, cplx v) {
  if (u == cplx(0.0) && v == cplx(0.0)) throw std::invalid_argument("eh_metric: (u,v) = (0,0)");
  const double r2 = std::norm(u) + std::norm(v);
  const double r4 = r2 * r2, r6 = r4 * r2;
  const double rho = -std::sqrt(1.0 + 1.0 / r4);
  const double s = -32.0 * kPi * rho;  // 32 pi sqrt(1 + r^-4)
  const double den = r2 * (1.0 + r4);

  EHMetric em{};
  auto& g = em.gram;
  g[0][1] = g[1][0] = s * (1.0 - std::norm(u) / den);
  g[2][3] = g[3][2] = s * (1.0 - std::norm(v) / den);
  g[0][3] = g[3][0] = s * (-std::conj(u) * v / den);
  g[1][2] = g[2][1] = s * (-u * std::conj(v) / den);

  em.I = Frame4{};
  em.I[0][0] = kI;
  em.I[1][1] = -kI;
  em.I[2][2] = kI;
  em.I[3][3] = -kI;

  // Blocks in the (du, dv | dub, dvb) splitting, then permuted into the
  // (du, dub, dv, dvb) frame order.
  const cplx nb[2][2] = {{-u * std::conj(v), r6 + std::norm(u)}, {-(r6 + std::norm(v)), std::conj(u) * v}};
  const int perm[4] = {0, 2, 1, 3};
  Frame4 jp{}, kp{};
  const cplx cj = -kI / (rho * r6);
  const cplx ck = 1.0 / (rho * r6);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      jp[static_cast<size_t>(perm[a])][static_cast<size_t>(perm[b + 2])] = cj * nb[a][b];
      jp[static_cast<size_t>(perm[a + 2])][static_cast<size_t>(perm[b])] = -cj * std::conj(nb[a][b]);
      kp[static_cast<size_t>(perm[a])][static_cast<size_t>(perm[b + 2])] = ck * nb[a][b];
      kp[static_cast<size_t>(perm[a + 2])][static_cast<size_t>(perm[b])] = ck * std::conj(nb[a][b]);
    }
  }
  em.J = jp;
  em.K = kp;

  // Real coordinates x = (Re u, Im u, Re v, Im v): d/dx1 = du + dub, etc.
  const cplx basis[4][4] = {{1, 1, 0, 0}, {kI, -kI, 0, 0}, {0, 0, 1, 1}, {0, 0, kI, -kI}};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      cplx acc = 0.0;
      for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) acc += basis[a][i] * basis[b][j] * g[i][j];
      em.real_gram[a][b] = acc.real();
    }
  }
  return em;
}

std::array<double, 4> sym4_eigenvalues(const double m_in[4][4]) {
  double a[4][4];
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = m_in[i][j];
  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-28) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::array<double, 4> ev = {a[0][0], a[1][1], a[2][2], a[3][3]};
  std::sort(ev.begin(), ev.end());
  return ev;
}

namespace {

// Identification of traceless skew-hermitian matrices with R^3:
// M = i (a . pauli) for a real 3-vector a.
std::array<double, 3> su2_vector(const Mat2c& m) {
  const Mat2c n = {-kI * m.a, -kI * m.b, -kI * m.c, -kI * m.d};
  return {n.a.real(), 0.5 * (n.b + n.c).real(), (0.5 * (n.b - n.c) / kI).real()};
}

Mat2c pauli_combo(const std::array<double, 3>& a) {
  return {cplx(a[0]), cplx(a[1], a[2]), cplx(a[1], -a[2]), cplx(-a[0])};
}

std::array<double, 3> cross(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

double dot(const std::array<double, 3>& x, const std::array<double, 3>& y) {
  return x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
}

Mat2c adjoint(const Mat2c& m) {
  return {std::conj(m.a), std::conj(m.c), std::conj(m.b), std::conj(m.d)};
}

}  // namespace

Mat2c nahc_t0(const Mat2c& psi) {
  const double scale = norm_inf(psi);
  if (scale == 0.0) throw std::invalid_argument("nahc_t0: zero matrix");
  if (std::abs(psi.trace()) > 1e-10 * scale || std::abs(psi.det()) > 1e-10 * scale * scale)
    throw std::invalid_argument("nahc_t0: input is not nilpotent");

  const Mat2c phi_m = psi - adjoint(psi);
  const Mat2c chi_m = {kI * (psi.a + std::conj(psi.a)), kI * (psi.b + std::conj(psi.c)),
                       kI * (psi.c + std::conj(psi.b)), kI * (psi.d + std::conj(psi.d))};
  const auto phi = su2_vector(phi_m);
  const auto chi = su2_vector(chi_m);
  const double phi2 = dot(phi, phi);
  const auto nxc = cross(phi, chi);
  const std::array<double, 3> n = {nxc[0] / phi2, nxc[1] / phi2, nxc[2] / phi2};
  const double pref = -std::sqrt(1.0 + phi2);
  const Mat2c nm = pauli_combo(n);
  return {pref * nm.a + phi_m.a, pref * nm.b + phi_m.b, pref * nm.c + phi_m.c, pref * nm.d + phi_m.d};
}

Mat2c nahc_t0_inv(const Mat2c& a) {
  const double scale = norm_inf(a);
  if (std::abs(a.trace()) > 1e-10 * scale || std::abs(a.det() + 1.0) > 1e-10 * scale * scale)
    throw std::invalid_argument("nahc_t0_inv: input must be traceless with det = -1");
  const Mat2c ah = adjoint(a);
  const Mat2c phi_m = {0.5 * (a.a - ah.a), 0.5 * (a.b - ah.b), 0.5 * (a.c - ah.c), 0.5 * (a.d - ah.d)};
  if (norm_inf(phi_m) < 1e-12 * scale)
    throw std::invalid_argument("nahc_t0_inv: hermitian-symmetric input has no preimage");
  const Mat2c xi = {0.5 * (a.a + ah.a), 0.5 * (a.b + ah.b), 0.5 * (a.c + ah.c), 0.5 * (a.d + ah.d)};
  // xi = s . pauli with s real.
  const std::array<double, 3> s = {xi.a.real(), xi.b.real(), xi.b.imag()};
  const double slen = std::sqrt(dot(s, s));
  const std::array<double, 3> n = {-s[0] / slen, -s[1] / slen, -s[2] / slen};
  const auto phi = su2_vector(phi_m);
  const auto nxphi = cross(n, phi);
  const cplx c[3] = {0.5 * (nxphi[0] + kI * phi[0]), 0.5 * (nxphi[1] + kI * phi[1]),
                     0.5 * (nxphi[2] + kI * phi[2])};
  Mat2c psi{};
  for (int j = 0; j < 3; ++j) {
    const Mat2c& pj = kPauli[j];
    psi = psi + Mat2c{c[j] * pj.a, c[j] * pj.b, c[j] * pj.c, c[j] * pj.d};
  }
  return psi;
}

EnergySeries energy_series(const DerivativeSeries& series) {
  const cplx uv = series.cfg.u * series.cfg.v;
  if (std::abs(uv) <= 1e-6) throw std::runtime_error("energy_series: energy formula degenerate (uv ~ 0)");
  const CentralValues& cv = series.cv;
  EnergySeries out;
  out.max_imag_residual = 0.0;
  out.e.push_back(8.0 * kPi * (1.0 - cv.rho * cv.r2));
  for (int n = 1; n <= series.order; ++n) {
    const cplx x20 = series.at(n, 2).coeff(0);
    const cplx x30 = series.at(n, 3).coeff(0);
    const cplx val =
        8.0 * kPi * (kI / cv.xbar[0].coeff(-1)) * (-cv.xbar[1].coeff(-1) * x30 + x20 * cv.xbar[2].coeff(-1));
    out.max_imag_residual = std::max(out.max_imag_residual, std::abs(val.imag()));
    out.e.push_back(val.real());
  }
  return out;
}

namespace {

// Truncated Taylor-in-t series whose coefficients are Laurent polynomials.
using TSeries = std::vector<LaurentPoly>;

TSeries tmul(const TSeries& a, const TSeries& b, int nmax, int lmax) {
  TSeries c(static_cast<size_t>(nmax) + 1);
  for (int n = 0; n <= nmax; ++n) {
    LaurentPoly acc;
    for (int k = 0; k <= n; ++k) acc += a[static_cast<size_t>(k)] * b[static_cast<size_t>(n - k)];
    // Truncate the lambda degree to keep the inversion bounded.
    if (!acc.zero() && acc.deg() > lmax) {
      std::vector<cplx> cc;
      for (int d = acc.lo(); d <= lmax; ++d) cc.push_back(acc.coeff(d));
      acc = LaurentPoly{acc.lo(), std::move(cc)};
    }
    c[static_cast<size_t>(n)] = std::move(acc);
  }
  return c;
}

LaurentPoly invert_powerseries(const LaurentPoly& g, int lmax) {
  // g has lo >= 0 and nonzero constant coefficient.
  const cplx g0 = g.coeff(0);
  std::vector<cplx> h(static_cast<size_t>(lmax) + 1);
  h[0] = 1.0 / g0;
  for (int k = 1; k <= lmax; ++k) {
    cplx s = 0.0;
    for (int j = 1; j <= k; ++j) s += g.coeff(j) * h[static_cast<size_t>(k - j)];
    h[static_cast<size_t>(k)] = -s / g0;
  }
  return LaurentPoly{0, std::move(h)};
}

}  // namespace

VarpiSeries varpi_series(const ModuliConfig& cfg, int eN, double fd_step, const OmegaTable& tbl1,
                         const OmegaTable& tbli) {
  const double h = fd_step > 0 ? fd_step : 1e-3;
  if (std::abs(cfg.u * cfg.v) < 1e-6) throw std::runtime_error("varpi_series: uv ~ 0 (x1 inversion degenerate)");

  // Series at the 4-point stencils of the four real coordinates.
  auto shifted_cfg = [&](int coord, double step) {
    cplx u = cfg.u, v = cfg.v;
    switch (coord) {
      case 0: u += step; break;
      case 1: u += kI * step; break;
      case 2: v += step; break;
      default: v += kI * step; break;
    }
    return ModuliConfig{cfg.p, u, v};
  };
  for (int c = 0; c < 4; ++c)
    for (double mult : {-2.0, 2.0})
      if (std::sqrt(shifted_cfg(c, mult * h).r2()) < kMinRadius)
        throw std::runtime_error("varpi_series: FD stencil reaches below the minimum radius");

  const DerivativeSeries center = derive(cfg, eN, tbl1, tbli);
  std::array<std::array<DerivativeSeries, 4>, 4> stencil{};  // [coord][-2h,-h,+h,+2h]
  for (int c = 0; c < 4; ++c) {
    const double steps[4] = {-2.0 * h, -h, h, 2.0 * h};
    for (int sidx = 0; sidx < 4; ++sidx)
      stencil[static_cast<size_t>(c)][static_cast<size_t>(sidx)] =
          derive(shifted_cfg(c, steps[sidx]), eN, tbl1, tbli);
  }

  // Fourth-order central differences, then Wirtinger recombination into
  // derivatives along (u, ub, v, vb).
  auto real_deriv = [&](int coord, int n, int j) {
    const auto& st = stencil[static_cast<size_t>(coord)];
    return (1.0 / (12.0 * h)) *
           (st[0].x[static_cast<size_t>(n)][static_cast<size_t>(j)] -
            8.0 * st[1].x[static_cast<size_t>(n)][static_cast<size_t>(j)] +
            8.0 * st[2].x[static_cast<size_t>(n)][static_cast<size_t>(j)] -
            st[3].x[static_cast<size_t>(n)][static_cast<size_t>(j)]);
  };

  const int lmax = eN + 3;
  const double half = 0.5;
  std::array<std::array<TSeries, 3>, 4> w{};  // w[dir][j]: dir in (u, ub, v, vb)
  for (int j = 0; j < 3; ++j) {
    for (int dir = 0; dir < 4; ++dir) w[static_cast<size_t>(dir)][static_cast<size_t>(j)].resize(static_cast<size_t>(eN) + 1);
    double inv_fact = 1.0;
    for (int n = 0; n <= eN; ++n) {
      if (n > 0) inv_fact /= n;
      const LaurentPoly dre_u = real_deriv(0, n, j), dim_u = real_deriv(1, n, j);
      const LaurentPoly dre_v = real_deriv(2, n, j), dim_v = real_deriv(3, n, j);
      w[0][static_cast<size_t>(j)][static_cast<size_t>(n)] = cplx(half * inv_fact) * (dre_u - kI * dim_u);
      w[1][static_cast<size_t>(j)][static_cast<size_t>(n)] = cplx(half * inv_fact) * (dre_u + kI * dim_u);
      w[2][static_cast<size_t>(j)][static_cast<size_t>(n)] = cplx(half * inv_fact) * (dre_v - kI * dim_v);
      w[3][static_cast<size_t>(j)][static_cast<size_t>(n)] = cplx(half * inv_fact) * (dre_v + kI * dim_v);
    }
  }

  // 1/x1 = lambda * h with h the inverse of the power series lambda*x1.
  TSeries g(static_cast<size_t>(eN) + 1);
  double inv_fact = 1.0;
  for (int n = 0; n <= eN; ++n) {
    if (n > 0) inv_fact /= n;
    g[static_cast<size_t>(n)] = cplx(inv_fact) * center.x[static_cast<size_t>(n)][0].shifted(1);
  }
  TSeries hinv(static_cast<size_t>(eN) + 1);
  hinv[0] = invert_powerseries(g[0], lmax);
  for (int n = 1; n <= eN; ++n) {
    LaurentPoly s;
    for (int k = 1; k <= n; ++k) s += g[static_cast<size_t>(k)] * hinv[static_cast<size_t>(n - k)];
    LaurentPoly acc = cplx(-1.0) * (hinv[0] * s);
    if (!acc.zero() && acc.deg() > lmax) {
      std::vector<cplx> cc;
      for (int d = acc.lo(); d <= lmax; ++d) cc.push_back(acc.coeff(d));
      acc = LaurentPoly{acc.lo(), std::move(cc)};
    }
    hinv[static_cast<size_t>(n)] = std::move(acc);
  }

  VarpiSeries vs;
  vs.order = eN;
  vs.kmin = -1;
  vs.kmax = eN + 2;
  vs.vm.assign(static_cast<size_t>(eN) + 1,
               std::vector<TwoForm4>(static_cast<size_t>(vs.kmax - vs.kmin) + 1));

  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) {
      // num = W_a(x2) W_b(x3) - W_b(x2) W_a(x3)
      const TSeries n1 = tmul(w[static_cast<size_t>(a)][1], w[static_cast<size_t>(b)][2], eN, lmax + 2);
      const TSeries n2 = tmul(w[static_cast<size_t>(b)][1], w[static_cast<size_t>(a)][2], eN, lmax + 2);
      TSeries num(static_cast<size_t>(eN) + 1);
      for (int n = 0; n <= eN; ++n)
        num[static_cast<size_t>(n)] = n1[static_cast<size_t>(n)] - n2[static_cast<size_t>(n)];
      const TSeries prod = tmul(num, hinv, eN, lmax + 1);
      double fact = 1.0;
      for (int m = 0; m <= eN; ++m) {
        if (m > 0) fact *= m;
        const LaurentPoly coefm = (32.0 * kPi * fact) * prod[static_cast<size_t>(m)].shifted(1);
        for (int k = vs.kmin; k <= vs.kmax; ++k)
          vs.vm[static_cast<size_t>(m)][static_cast<size_t>(k - vs.kmin)].set(a, b, coefm.coeff(k));
      }
    }
  }
  return vs;
}

std::vector<IdentityResult> identity_suite(const OmegaTable& t1, const OmegaTable& ti) {
  if (t1.depth < 3 || ti.depth < 3) throw std::invalid_argument("identity_suite: depth 3 tables required");
  auto O = [&](std::initializer_list<int> w) { return t1.value(Word(w)); };
  auto T = [&](std::initializer_list<int> w) { return ti.value(Word(w)); };
  const double pi = kPi;
  const cplx i = kI;

  std::vector<IdentityResult> out;
  auto push = [&](const std::string& name, cplx lhs, cplx rhs) {
    out.push_back({name, lhs, rhs, std::abs(lhs - rhs)});
  };

  push("omega23(1)+omega32(i) = omega21(1)+omega31(i)", O({2, 3}) + T({3, 2}), O({2, 1}) + T({3, 1}));

  push("omega223+omega311 = -(i/2pi) omega21^2", O({2, 2, 3}) + O({3, 1, 1}),
       -i / (2.0 * pi) * O({2, 1}) * O({2, 1}));
  push("theta211+theta332 = (i/2pi) theta31^2", T({2, 1, 1}) + T({3, 3, 2}),
       i / (2.0 * pi) * T({3, 1}) * T({3, 1}));
  {
    const cplx s = O({2, 1}) + T({3, 1});
    push("omega223-theta332 = -(i/2pi)(omega21+theta31)^2 + i pi^3/6", O({2, 2, 3}) - T({3, 3, 2}),
         -i / (2.0 * pi) * s * s + i * pi * pi * pi / 6.0);
  }

  const cplx o21 = O({2, 1}), t31 = T({3, 1});
  const cplx i1 = 6.0 * pi * (O({3, 3, 3}) - T({2, 2, 2})) + i * (o21 * o21 + t31 * t31) +
                  2.0 * pi * (O({2, 2, 3}) - T({3, 3, 2})) - 8.0 * pi * (O({3, 1, 1}) - T({2, 1, 1})) +
                  10.0 * i * o21 * t31;
  const cplx i2 = i * (o21 * o21 - t31 * t31) +
                  2.0 * pi * (O({2, 2, 3}) + T({3, 3, 2}) + O({3, 1, 1}) + T({2, 1, 1})) -
                  4.0 * pi * (O({3, 3, 3}) + T({2, 2, 2}));
  const cplx i3 = -i * (o21 * o21 + t31 * t31) +
                  2.0 * pi * (O({3, 3, 3}) - T({2, 2, 2}) - O({2, 2, 3}) + T({3, 3, 2})) -
                  2.0 * i * o21 * t31;
  const double pi4 = pi * pi * pi * pi;
  push("I1 = -i pi^4/3", i1, -i * pi4 / 3.0);
  push("I2 = 0", i2, cplx(0.0));
  push("I3 = -i pi^4", i3, -i * pi4);

  // Character-variety identities of depth 3.
  {
    const cplx lhs = O({2, 1, 2}) - T({1, 2, 1}) - T({2, 1, 2});
    const cplx o1 = O({1}), o2 = O({2});
    const cplx rhs = 0.5 * o1 * T({1, 2}) - 0.5 * o1 * T({2, 1}) + 0.5 * o1 * O({2, 2}) -
                     i * O({1, 2}) * O({1, 2}) / (4.0 * pi) + 3.0 * i * O({2, 1}) * O({2, 1}) / (4.0 * pi) -
                     0.5 * o2 * O({1, 2}) + 0.5 * o2 * O({2, 1}) - i * O({1, 2}) * O({2, 1}) / (2.0 * pi) -
                     0.5 * T({2}) * T({1, 1}) - 0.5 * T({1}) * T({2, 2}) +
                     i * o2 * o2 * o1 * o1 / (4.0 * pi) + 0.25 * i * pi * o1 * o1 + 0.25 * o2 * o2 * o1 -
                     0.25 * pi * pi * o1 + i * pi * pi * pi / 6.0;
    push("omega212-theta121-theta212 = (depth-3 relation A)", lhs, rhs);
  }
  {
    const cplx lhs = O({1, 3, 1}) + O({3, 1, 3}) - T({3, 1, 3});
    const cplx o1 = O({1}), o3 = O({3}), th3 = T({3});
    const cplx rhs = -0.5 * o1 * O({1, 3}) + 0.5 * o1 * O({3, 1}) + 0.5 * o1 * O({3, 3}) +
                     0.5 * o3 * O({1, 1}) + 0.5 * i * pi * O({1, 3}) - 0.5 * i * pi * O({3, 1}) -
                     i * T({1, 3}) * T({1, 3}) / (4.0 * pi) + 3.0 * i * T({3, 1}) * T({3, 1}) / (4.0 * pi) +
                     0.5 * th3 * T({1, 3}) - 0.5 * th3 * T({3, 1}) -
                     i * T({1, 3}) * T({3, 1}) / (2.0 * pi) - 0.5 * T({1}) * T({3, 3}) +
                     i * o1 * o1 * th3 * th3 / (4.0 * pi) + 0.25 * o1 * th3 * th3 +
                     0.25 * i * pi * o1 * o1 + 0.75 * pi * pi * o1 - i * pi * pi * pi / 3.0;
    push("omega131+omega313-theta313 = (depth-3 relation B)", lhs, rhs);
  }
  {
    const cplx lhs = O({2, 3, 2}) - T({3, 2, 3});
    const cplx o2 = O({2}), o3 = O({3}), th2 = T({2}), th3 = T({3});
    const cplx rhs = -0.5 * th3 * O({2, 1}) - i * O({2, 1}) * T({2, 3}) / (2.0 * pi) +
                     3.0 * i * O({2, 1}) * T({3, 1}) / (2.0 * pi) + th3 * O({2, 3}) +
                     0.5 * th3 * O({3, 2}) - i * O({3, 2}) * T({2, 3}) / (2.0 * pi) -
                     i * O({3, 2}) * T({3, 1}) / (2.0 * pi) + 3.0 * i * O({2, 1}) * O({2, 1}) / (4.0 * pi) -
                     i * O({3, 2}) * O({2, 1}) / (2.0 * pi) - i * pi * O({2, 1}) -
                     i * O({3, 2}) * O({3, 2}) / (4.0 * pi) + 0.5 * o3 * O({2, 2}) + 0.5 * o2 * O({2, 3}) -
                     0.5 * o2 * O({3, 2}) - i * pi * O({3, 2}) - i * T({2, 3}) * T({2, 3}) / (4.0 * pi) +
                     3.0 * i * T({3, 1}) * T({3, 1}) / (4.0 * pi) + 0.5 * th3 * T({2, 3}) -
                     i * pi * T({2, 3}) - 0.5 * th3 * T({3, 1}) - i * T({2, 3}) * T({3, 1}) / (2.0 * pi) -
                     i * pi * T({3, 1}) - 0.5 * th2 * T({3, 3}) - pi * pi * o2 + pi * pi * th3 -
                     i * pi * pi * pi / 3.0;
    push("omega232-theta323 = (depth-3 relation C)", lhs, rhs);
  }
  return out;
}

}  // namespace tw4p
