#pragma once

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace tw4p {

using cplx = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// Relative threshold for trimming leading/trailing coefficients at
// construction of a LaurentPoly.
inline constexpr double kTrimRel = 1e-14;

// Minimum allowed distance between an integration path and a puncture.
inline constexpr double kPathMargin = 0.05;

// Minimum radius r = sqrt(|u|^2+|v|^2) for series computations; below this
// the order-n linear system degenerates and only blow-up diagnostics apply.
inline constexpr double kMinRadius = 0.05;

// Default absolute/relative tolerance of the adaptive integrator.
inline constexpr double kOdeTol = 1e-11;

inline bool finite(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace tw4p
