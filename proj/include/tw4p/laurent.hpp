#pragma once

#include <utility>
#include <vector>

#include "tw4p/common.hpp"

namespace tw4p {

// Finite Laurent polynomial in lambda with complex double coefficients,
// stored densely from the lowest degree. Canonical form: the leading and
// trailing coefficients are nonzero (relative to the largest coefficient)
// unless the polynomial is zero. Trimming happens only at construction.
class LaurentPoly {
 public:
  LaurentPoly() = default;  // zero polynomial
  LaurentPoly(int lo, std::vector<cplx> coeffs);

  static LaurentPoly constant(cplx c) { return {0, {c}}; }
  static LaurentPoly monomial(int k, cplx c = 1.0) { return {k, {c}}; }

  bool zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  // Degree of the zero polynomial is INT_MIN-ish; callers must check zero().
  int deg() const { return hi(); }
  const std::vector<cplx>& coeffs() const { return c_; }

  cplx coeff(int k) const {
    if (zero() || k < lo_ || k > hi()) return {};
    return c_[static_cast<size_t>(k - lo_)];
  }

  cplx eval(cplx lambda) const;
  double norm_inf() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g);
  friend LaurentPoly operator*(cplx a, const LaurentPoly& f);
  friend LaurentPoly operator*(const LaurentPoly& f, cplx a) { return a * f; }
  LaurentPoly& operator+=(const LaurentPoly& g) { return *this = *this + g; }
  LaurentPoly& operator-=(const LaurentPoly& g) { return *this = *this - g; }
  LaurentPoly& operator*=(const LaurentPoly& g) { return *this = *this * g; }

  // Multiplication by lambda^k.
  LaurentPoly shifted(int k) const;

 private:
  int lo_ = 0;
  std::vector<cplx> c_;
};

// f*(lambda) = conj(f(-1/conj(lambda))): coefficient c_k at degree k maps to
// (-1)^k conj(c_k) at degree -k. An involution, multiplicative over products.
LaurentPoly star(const LaurentPoly& f);

// Degree-window extractions. f = neg + cst + pos exactly.
LaurentPoly neg_part(const LaurentPoly& f);
LaurentPoly pos_part(const LaurentPoly& f);
cplx const_coeff(const LaurentPoly& f);

// star of the negative part; a polynomial supported on positive degrees.
LaurentPoly neg_star(const LaurentPoly& f);

// Euclidean division of ordinary polynomials (lo >= 0 required):
// f = d*q + r with deg(r) < deg(d). Throws on d == 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& d);

inline double dist(const LaurentPoly& f, const LaurentPoly& g) { return (f - g).norm_inf(); }

}  // namespace tw4p
