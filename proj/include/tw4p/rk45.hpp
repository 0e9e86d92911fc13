#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "tw4p/common.hpp"

namespace tw4p {

struct OdeOptions {
  double atol = kOdeTol;
  double rtol = kOdeTol;
  double h_init = 1e-3;
  long max_steps = 5'000'000;
};

// Embedded Dormand-Prince 5(4) pair with PI step-size control on a complex
// state vector. Integrates y' = f(s, y) from s0 to s1 in place. When
// err_accum is given, the per-component local error estimates of accepted
// steps are accumulated into it.
template <class F>
void rk45_integrate(F&& f, std::vector<cplx>& y, double s0, double s1, const OdeOptions& opt = {},
                    std::vector<double>* err_accum = nullptr) {
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                          a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                          b6 = 11.0 / 84;
  static constexpr double e1 = 35.0 / 384 - 5179.0 / 57600, e3 = 500.0 / 1113 - 7571.0 / 16695,
                          e4 = 125.0 / 192 - 393.0 / 640, e5 = -2187.0 / 6784 + 92097.0 / 339200,
                          e6 = 11.0 / 84 - 187.0 / 2100, e7 = -1.0 / 40;

  const size_t n = y.size();
  const double dir = (s1 >= s0) ? 1.0 : -1.0;
  double s = s0;
  double h = dir * std::min(opt.h_init, std::abs(s1 - s0));
  std::vector<cplx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), k7(n), yt(n), ynew(n);
  f(s, y, k1);
  double err_prev = 1.0;
  long steps = 0;

  while (dir * (s1 - s) > 0.0) {
    if (++steps > opt.max_steps) throw std::runtime_error("rk45: step limit exceeded");
    if (dir * (s + h - s1) > 0.0) h = s1 - s;
    if (std::abs(h) < 1e-15 * std::max(1.0, std::abs(s)))
      throw std::runtime_error("rk45: step size underflow");

    for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * a21 * k1[i];
    f(s + c2 * h, yt, k2);
    for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
    f(s + c3 * h, yt, k3);
    for (size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
    f(s + c4 * h, yt, k4);
    for (size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i]);
    f(s + c5 * h, yt, k5);
    for (size_t i = 0; i < n; ++i)
      yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i]);
    f(s + h, yt, k6);
    for (size_t i = 0; i < n; ++i)
      ynew[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    f(s + h, ynew, k7);

    double err = 0.0;
    for (size_t i = 0; i < n; ++i) {
      const cplx ei = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      const double sc = opt.atol + opt.rtol * std::max(std::abs(y[i]), std::abs(ynew[i]));
      const double r = std::abs(ei) / sc;
      err += r * r;
    }
    err = std::sqrt(err / static_cast<double>(n));

    if (err <= 1.0) {
      if (err_accum) {
        for (size_t i = 0; i < n; ++i)
          (*err_accum)[i] +=
              std::abs(h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]));
      }
      s += h;
      y.swap(ynew);
      k1.swap(k7);  // FSAL
      const double fac = 0.9 * std::pow(std::max(err, 1e-10), -0.17) * std::pow(err_prev, 0.04);
      h *= std::clamp(fac, 0.2, 5.0);
      err_prev = std::max(err, 1e-10);
    } else {
      h *= std::clamp(0.9 * std::pow(err, -0.2), 0.1, 1.0);
    }
  }
}

}  // namespace tw4p
