#include "tw4p/moduli.hpp"

#include <cmath>

namespace tw4p {

namespace {

// Sign of omega_j at puncture p_k.
constexpr double kOmegaSign[3][4] = {
    {1, -1, 1, -1},
    {1, -1, -1, 1},
    {1, 1, -1, -1},
};

}  // namespace

ModuliConfig::ModuliConfig(cplx p_, cplx u_, cplx v_) : p(p_), u(u_), v(v_) {
  if (!(p.real() > 0.0 && p.imag() > 0.0))
    throw std::invalid_argument("ModuliConfig: p must lie in the open upper-right quadrant");
  if (u == cplx(0.0) && v == cplx(0.0)) throw std::invalid_argument("ModuliConfig: (u,v) = (0,0)");
  const auto ps = punctures();
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (std::abs(ps[static_cast<size_t>(a)] - ps[static_cast<size_t>(b)]) < 1e-12)
        throw std::invalid_argument("ModuliConfig: punctures collide");
}

CentralValues central_values(const ModuliConfig& cfg) {
  const cplx u = cfg.u, v = cfg.v;
  const double r2 = cfg.r2();
  const double rho = -std::sqrt(1.0 + 1.0 / (r2 * r2));
  const cplx uvbar = u * std::conj(v);

  const std::array<cplx, 3> lower = {u * v, 0.5 * (v * v - u * u), 0.5 * kI * (u * u + v * v)};
  const std::array<double, 3> mid = {rho * (std::norm(u) - std::norm(v)), 2.0 * rho * uvbar.real(),
                                     2.0 * rho * uvbar.imag()};

  CentralValues cv;
  cv.rho = rho;
  cv.r2 = r2;
  for (int j = 0; j < 3; ++j) {
    const size_t js = static_cast<size_t>(j);
    cv.xbar[js] = LaurentPoly{-1, {lower[js], cplx(mid[js]), -std::conj(lower[js])}};
  }
  return cv;
}

ResidueSet residues(const std::array<LaurentPoly, 3>& x) { return {residue_pattern(x)}; }

cplx omega_form(const ModuliConfig& cfg, int j, cplx z) {
  const auto ps = cfg.punctures();
  cplx s = 0.0;
  for (int k = 0; k < 4; ++k) s += kOmegaSign[j - 1][k] / (z - ps[static_cast<size_t>(k)]);
  return s;
}

Mat2c eta_coeff(const ModuliConfig& cfg, const std::array<LaurentPoly, 3>& x, double t, cplx z, cplx lambda) {
  if (lambda == cplx(0.0)) throw std::invalid_argument("eta_coeff: lambda = 0");
  for (cplx pk : cfg.punctures())
    if (std::abs(z - pk) < 1e-8) throw std::runtime_error("eta_coeff: pole (z at a puncture)");
  Mat2c m{};
  for (int j = 1; j <= 3; ++j) {
    const cplx xv = t * x[static_cast<size_t>(j - 1)].eval(lambda) * omega_form(cfg, j, z);
    const Mat2c& pj = kPauli[j - 1];
    m = m + Mat2c{xv * pj.a, xv * pj.b, xv * pj.c, xv * pj.d};
  }
  return m;
}

Mat2c psi_matrix(const ModuliConfig& cfg, double t, cplx z) {
  const cplx uv = cfg.u * cfg.v;
  const cplx w2 = 0.5 * (cfg.v * cfg.v - cfg.u * cfg.u);
  const cplx w3 = 0.5 * kI * (cfg.u * cfg.u + cfg.v * cfg.v);
  Mat2c m{};
  const std::array<cplx, 3> c = {uv, w2, w3};
  for (int j = 1; j <= 3; ++j) {
    const cplx xv = t * c[static_cast<size_t>(j - 1)] * omega_form(cfg, j, z);
    const Mat2c& pj = kPauli[j - 1];
    m = m + Mat2c{xv * pj.a, xv * pj.b, xv * pj.c, xv * pj.d};
  }
  return m;
}

cplx det_psi_closed(const ModuliConfig& cfg, double t, cplx z) {
  const cplx u = cfg.u, v = cfg.v, p = cfg.p;
  const cplx pp = p * p + 1.0 / (p * p);
  const cplx num = -4.0 * t * t * (std::pow(u, 4) - pp * u * u * v * v + std::pow(v, 4));
  const cplx den = std::pow(z, 4) - pp * z * z + 1.0;
  return num / den;
}

HiggsData higgs_data(const ModuliConfig& cfg, double t) {
  const cplx u = cfg.u, v = cfg.v;
  const double scale = std::max(std::norm(u), std::norm(v));
  if (std::abs(u * v) < 1e-12 * scale || std::abs(u * u - v * v) < 1e-12 * scale)
    throw std::runtime_error("higgs_data: degenerate parabolic structure (u^2 = v^2 or uv = 0)");

  HiggsData h;
  const cplx uv = u * v;
  h.res[0] = {t * uv, -t * u * u, t * v * v, -t * uv};
  h.res[1] = {-t * uv, -t * v * v, t * u * u, t * uv};
  h.res[2] = {t * uv, t * u * u, -t * v * v, -t * uv};
  h.res[3] = {-t * uv, t * v * v, -t * u * u, t * uv};
  h.crossratio = -4.0 * u * u * v * v / ((u * u - v * v) * (u * u - v * v));

  h.det_residual = 0.0;
  const std::array<cplx, 4> samples = {cplx(0.0), cplx(0.37, 0.21), cplx(-0.45, 0.6), cplx(1.7, -0.3)};
  for (cplx z : samples) {
    bool near = false;
    for (cplx pk : cfg.punctures()) near = near || std::abs(z - pk) < 0.2;
    if (near) continue;
    const cplx assembled = psi_matrix(cfg, t, z).det();
    h.det_residual = std::max(h.det_residual, std::abs(assembled - det_psi_closed(cfg, t, z)));
  }
  return h;
}

std::optional<cplx> mu_root(const CentralValues& cv, int j) {
  const LaurentPoly& x = cv.xbar[static_cast<size_t>(j - 1)];
  const double scale = std::max(x.norm_inf(), 1e-300);
  const cplx x0 = x.coeff(0);
  const cplx x1 = x.coeff(1);
  if (std::abs(x0) <= 1e-14 * scale) return std::nullopt;
  const double x0r = x0.real();  // xbar_{j,0} is real
  if (std::abs(x1) <= 1e-14 * scale) return cplx(0.0);
  // mu = (2 conj(x1)/x0) f(4|x1|^2/x0^2), f(z) = (sqrt(1+z)-1)/z; the f form
  // is stable as x1 -> 0.
  const double zz = 4.0 * std::norm(x1) / (x0r * x0r);
  double f;
  if (zz < 1e-8) {
    f = 0.5 - zz / 8.0 + zz * zz / 16.0;
  } else {
    f = (std::sqrt(1.0 + zz) - 1.0) / zz;
  }
  return 2.0 * std::conj(x1) / x0r * f;
}

std::array<double, 3> blowup_limit(cplx ut, cplx vt) {
  const double n = std::norm(ut) + std::norm(vt);
  if (std::abs(n - 1.0) > 1e-12) throw std::invalid_argument("blowup_limit: |u|^2+|v|^2 must be 1");
  const cplx uvbar = ut * std::conj(vt);
  return {-(std::norm(ut) - std::norm(vt)), -2.0 * uvbar.real(), -2.0 * uvbar.imag()};
}

}  // namespace tw4p
