#pragma once

#include <string>

#include "tw4p/deformation.hpp"

namespace tw4p {

// Complex 2-form on the moduli space in the ordered coframe
// (du, du_bar, dv, dv_bar): form = sum_{a<b} m[a][b] e_a ^ e_b.
struct TwoForm4 {
  cplx m[4][4]{};

  void set(int a, int b, cplx val) {
    m[a][b] = val;
    m[b][a] = -val;
  }
  cplx operator()(int a, int b) const { return m[a][b]; }

  TwoForm4 operator+(const TwoForm4& o) const;
  TwoForm4 operator-(const TwoForm4& o) const;
  friend TwoForm4 operator*(cplx s, const TwoForm4& f);
  double norm() const;
};

// Wedge of two 1-forms given by their coefficients in the coframe.
TwoForm4 wedge(const std::array<cplx, 4>& a, const std::array<cplx, 4>& b);

using Frame4 = std::array<std::array<cplx, 4>, 4>;  // operator on (du,dub,dv,dvb) frame

Frame4 frame_mul(const Frame4& x, const Frame4& y);
double frame_dist(const Frame4& x, const Frame4& y);

struct VarpiT0 {
  TwoForm4 vm1;  // lambda^-1 coefficient: omega_J + i omega_K
  TwoForm4 v0;   // constant coefficient: -2 omega_I
  TwoForm4 v1;   // lambda coefficient: -(omega_J - i omega_K)
  TwoForm4 wI, wJ, wK;
};

VarpiT0 varpi_t0(cplx u, cplx v);

// Constant lambda-coefficient of the twisted form written in the frozen
// parameter coordinates; exact (no finite differences).
TwoForm4 varpi0_from_parameters(cplx u, cplx v);

struct EHMetric {
  Frame4 gram;             // complex-frame Gram of the metric
  Frame4 I, J, K;          // complex structures
  double real_gram[4][4];  // Gram in (Re u, Im u, Re v, Im v) coordinates
};

EHMetric eh_metric(cplx u, cplx v);

// Eigenvalues of a symmetric real 4x4 matrix (ascending), by Jacobi rotations.
std::array<double, 4> sym4_eigenvalues(const double m[4][4]);

// t=0 correspondence between nonzero nilpotent matrices and the det = -1
// slice, and its inverse.
Mat2c nahc_t0(const Mat2c& psi);
Mat2c nahc_t0_inv(const Mat2c& a);

struct EnergySeries {
  std::vector<double> e;      // E^(0..N)
  double max_imag_residual;   // reality check of the bracket formula
};

EnergySeries energy_series(const DerivativeSeries& series);

// t-derivatives of the lambda-coefficients of the twisted form, computed by
// fourth-order central differences in the four real moduli directions.
struct VarpiSeries {
  int order;            // max t-derivative
  int kmin, kmax;       // lambda-degree window
  std::vector<std::vector<TwoForm4>> vm;  // vm[m][k - kmin]

  const TwoForm4& coeff(int m, int k) const {
    return vm[static_cast<size_t>(m)][static_cast<size_t>(k - kmin)];
  }
};

VarpiSeries varpi_series(const ModuliConfig& cfg, int eN, double fd_step, const OmegaTable& tbl1,
                         const OmegaTable& tbli);

struct IdentityResult {
  std::string name;
  cplx lhs, rhs;
  double residual;
};

// Evaluates the linear and quadratic relations among depth <= 3 values of
// the iterated integrals at both endpoints, including the three constants
// I1, I2, I3.
std::vector<IdentityResult> identity_suite(const OmegaTable& t1, const OmegaTable& ti);

}  // namespace tw4p
