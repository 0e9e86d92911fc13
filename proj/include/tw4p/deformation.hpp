#pragma once

#include <vector>

#include "tw4p/moduli.hpp"
#include "tw4p/omega.hpp"

namespace tw4p {

// t-derivatives of the parameter triple at t = 0, stored unnormalized:
// x_j(t) = sum_n x[n][j] t^n / n!. Order 0 holds the central values; for
// n >= 1 the entries are ordinary polynomials of degree <= n+1 with the
// lambda^-1 coefficient frozen at its central value.
struct DerivativeSeries {
  ModuliConfig cfg;
  CentralValues cv;
  int order;                                      // highest computed derivative
  std::vector<std::array<LaurentPoly, 3>> x;      // [n][j]

  const LaurentPoly& at(int n, int j) const { return x[static_cast<size_t>(n)][static_cast<size_t>(j - 1)]; }
};

// Closed-form first derivative from the two depth-2 integrals.
std::array<LaurentPoly, 3> first_order(const CentralValues& cv, cplx omega21_at_1, cplx omega31_at_i);

// Order-(n+1) derivative of the endpoint matrix (P for endpoint 1, Q for
// endpoint i), assembled from the series up to order n and the word
// integrals. With drop_top the unknown x^(n) in the length-1 word term is
// replaced by zero, which yields the "lower" part of the recursion.
Mat2L pq_matrix_derivative(const DerivativeSeries& series, const OmegaTable& table, int n, bool drop_top);

// The order-by-order recursion: solves the reality and normalization
// conditions for x^(1), ..., x^(N). Both tables must have depth >= N+1.
DerivativeSeries derive(const ModuliConfig& cfg, int eN, const OmegaTable& tbl1, const OmegaTable& tbli);

// Taylor evaluation x_j(t, lambda); lambda = 0 is rejected.
std::array<cplx, 3> eval_x(const DerivativeSeries& series, double t, cplx lambda);

struct LaxWitness {
  Mat2L X;
  double residual;  // inf-norm of A' - [A, X] over lambda-coefficients
};

// Least-squares X with polynomial entries solving A' = [A, X] for
// A = A_1(xbar), A' = A_1(x'). X is unique only up to adding g*A.
LaxWitness lax_solve(const DerivativeSeries& series);

// Max over n <= order of the inf-norm of the n-th Leibniz coefficient of
// sum_j x_j(t)^2 - 1 (0-th included).
double unit_constraint_residual(const DerivativeSeries& series);

}  // namespace tw4p
