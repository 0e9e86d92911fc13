#pragma once

#include "tw4p/deformation.hpp"
#include "tw4p/omega.hpp"

namespace tw4p {

struct TransportResult {
  Mat2c value;          // endpoint of the fundamental solution, started at Id
  cplx lambda;
  double t;
  double det_residual;  // |det - 1|
  double err_estimate;  // accumulated local error of the integrator
};

// Parallel transport of d Phi = Phi eta_t along the path, with the
// parameters evaluated from the truncated series at (t, lambda).
TransportResult transport(const ModuliConfig& cfg, const DerivativeSeries& series, double t, cplx lambda,
                          const PathSpec& path, double tol = kOdeTol);

struct TraceSet {
  cplx p, q, r;
  cplx s12, s23, s13;
};

// Trace functions of the half-period transports P = Phi(1), Q = Phi(i):
// p = P11 P21 - P12 P22, q = i(Q11 Q21 + Q12 Q22), r the quadratic
// expression in both; s_jk = 2 - 4 (.)^2.
TraceSet traces(const Mat2c& P, const Mat2c& Q);

// Fricke factors Q_j = s^2 + 4(p^2+q^2+r^2-1) + 8(-1)^j pqr at s = 2cos(2 pi t).
std::pair<cplx, cplx> fricke_factors(const TraceSet& tr, double t);

struct MonodromyReport {
  double t;
  std::vector<cplx> lambdas;          // on |lambda| = 1
  std::vector<double> p_res, q_res, r_res, k_res;  // reality and unit-constraint residuals
  std::vector<cplx> q1, q2;           // Fricke factors
  double max_p = 0, max_q = 0, max_r = 0, max_k = 0, max_q2 = 0;
  double min_abs_q1 = 0;
};

// Reality residuals f(lambda) - conj(f(-lambda)) for f in {p, q, r} on a
// unit-circle grid, plus |sum_j x_j^2 - 1| and the Fricke factors.
MonodromyReport reality_residual(const ModuliConfig& cfg, const DerivativeSeries& series, double t,
                                 const std::vector<cplx>& lambda_grid, double tol = kOdeTol);

// Monodromy along a finite loop around p_k (radial spoke, full circle,
// return), based at 0.
Mat2c loop_monodromy(const ModuliConfig& cfg, const DerivativeSeries& series, double t, cplx lambda, int k,
                     double tol = kOdeTol);

PathSpec loop_path(const ModuliConfig& cfg, int k);

}  // namespace tw4p
