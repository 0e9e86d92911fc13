#pragma once

#include <array>
#include <cmath>
#include <vector>

#include "tw4p/common.hpp"
#include "tw4p/laurent.hpp"

namespace tw4p {

// 2x2 matrix over cplx or LaurentPoly. Entries (a b; c d).
template <class T>
struct Mat2 {
  T a{}, b{}, c{}, d{};

  static Mat2 identity() { return {T(1.0), T{}, T{}, T(1.0)}; }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }

  T trace() const { return a + d; }
  T det() const { return a * d - b * c; }
};

using Mat2c = Mat2<cplx>;
using Mat2L = Mat2<LaurentPoly>;

template <class T>
Mat2<T> commutator(const Mat2<T>& x, const Mat2<T>& y) {
  return x * y - y * x;
}

inline Mat2c inverse(const Mat2c& m) {
  const cplx dt = m.det();
  return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

inline double norm_inf(const Mat2c& m) {
  return std::max(std::max(std::abs(m.a), std::abs(m.b)), std::max(std::abs(m.c), std::abs(m.d)));
}

inline double norm_inf(const Mat2L& m) {
  return std::max(std::max(m.a.norm_inf(), m.b.norm_inf()), std::max(m.c.norm_inf(), m.d.norm_inf()));
}

inline Mat2c eval(const Mat2L& m, cplx lambda) {
  return {m.a.eval(lambda), m.b.eval(lambda), m.c.eval(lambda), m.d.eval(lambda)};
}

// Scalar i * x, overloaded so the residue pattern below works for both
// coefficient types.
inline cplx imul(cplx x) { return kI * x; }
inline LaurentPoly imul(const LaurentPoly& x) { return kI * x; }

// Solve a 3x3 complex linear system by Cramer's rule. Throws (carrying the
// determinant value in the message) when |det| <= eps_rel * scale.
std::array<cplx, 3> cramer3(const std::array<std::array<cplx, 3>, 3>& m, const std::array<cplx, 3>& rhs,
                            double eps_rel = 1e-12);

// Dense complex least squares min ||A x - b||_2, tolerant of rank-deficient A
// (returns one minimizer). Normal equations with a small ridge plus iterative
// refinement; adequate for the tiny systems used here.
std::vector<cplx> lstsq(const std::vector<std::vector<cplx>>& a, const std::vector<cplx>& b);

}  // namespace tw4p
