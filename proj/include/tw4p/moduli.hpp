#pragma once

#include <array>
#include <optional>

#include "tw4p/laurent.hpp"
#include "tw4p/matrix2.hpp"

namespace tw4p {

// Base point of the moduli space: puncture generator p in the open upper
// right quadrant and Higgs coordinates (u,v) != (0,0). The punctures are
// p, -1/p, -p, 1/p.
struct ModuliConfig {
  cplx p;
  cplx u;
  cplx v;

  ModuliConfig(cplx p_, cplx u_, cplx v_);

  std::array<cplx, 4> punctures() const { return {p, -1.0 / p, -p, 1.0 / p}; }
  double r2() const { return std::norm(u) + std::norm(v); }
};

// The parameter triple at t = 0 together with rho and r^2.
struct CentralValues {
  std::array<LaurentPoly, 3> xbar;  // each supported on degrees [-1, 1]
  double rho;
  double r2;
};

CentralValues central_values(const ModuliConfig& cfg);

// Residue matrices A_1..A_4 of the Fuchsian ansatz as functions of the
// parameter triple; valid for any coefficient type.
template <class T>
std::array<Mat2<T>, 4> residue_pattern(const std::array<T, 3>& x) {
  const T& x1 = x[0];
  const T b12 = x[1] + imul(x[2]);   // x2 + i x3
  const T b21 = x[1] - imul(x[2]);   // x2 - i x3
  return {{
      {x1, b12, b21, -x1},
      {-x1, -b21, -b12, x1},
      {x1, -b12, -b21, -x1},
      {-x1, b21, b12, x1},
  }};
}

struct ResidueSet {
  std::array<Mat2L, 4> A;
};

ResidueSet residues(const std::array<LaurentPoly, 3>& x);

// Scalar value of the 1-form omega_j at z (the dz-coefficient), j in 1..3.
cplx omega_form(const ModuliConfig& cfg, int j, cplx z);

// dz-coefficient of eta_t = t sum_j x_j(lambda) m_j omega_j at (z, lambda).
// Throws "pole" when z is within 1e-8 of a puncture.
Mat2c eta_coeff(const ModuliConfig& cfg, const std::array<LaurentPoly, 3>& x, double t, cplx z, cplx lambda);

// Higgs field Psi(z) = t sum_j xbar_{j,-1} m_j omega_j and its closed-form
// determinant -4t^2 (u^4 - (p^2+p^-2) u^2 v^2 + v^4) / (z^4 - (p^2+p^-2) z^2 + 1).
Mat2c psi_matrix(const ModuliConfig& cfg, double t, cplx z);
cplx det_psi_closed(const ModuliConfig& cfg, double t, cplx z);

struct HiggsData {
  std::array<Mat2c, 4> res;  // residues of Psi at p_1..p_4
  cplx crossratio;           // -4 u^2 v^2 / (u^2 - v^2)^2
  double det_residual;       // max |det Psi(z) - closed form| over sample points
};

// Throws "degenerate parabolic structure" when u^2 = v^2 or uv = 0.
HiggsData higgs_data(const ModuliConfig& cfg, double t);

// Root of P_j = lambda*xbar_j inside the unit disc; absent iff xbar_{j,0} = 0.
std::optional<cplx> mu_root(const CentralValues& cv, int j);

// Limit of the parameter constants as r -> 0 in direction (ut, vt) on the
// unit sphere of C^2. Throws on non-normalized input.
std::array<double, 3> blowup_limit(cplx ut, cplx vt);

}  // namespace tw4p
