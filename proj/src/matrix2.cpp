#include "tw4p/matrix2.hpp"

#include <algorithm>
#include <sstream>

namespace tw4p {

namespace {

cplx det3(const std::array<std::array<cplx, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

std::array<cplx, 3> cramer3(const std::array<std::array<cplx, 3>, 3>& m, const std::array<cplx, 3>& rhs,
                            double eps_rel) {
  double scale = 0.0;
  for (const auto& row : m)
    for (const cplx& z : row) scale = std::max(scale, std::abs(z));
  const cplx dt = det3(m);
  if (std::abs(dt) <= eps_rel * std::max(scale * scale * scale, 1e-300)) {
    std::ostringstream os;
    os << "cramer3: near-singular system, det = " << dt.real() << " + " << dt.imag() << "i";
    throw std::runtime_error(os.str());
  }
  std::array<cplx, 3> x;
  for (int j = 0; j < 3; ++j) {
    auto mj = m;
    for (int i = 0; i < 3; ++i) mj[static_cast<size_t>(i)][static_cast<size_t>(j)] = rhs[static_cast<size_t>(i)];
    x[static_cast<size_t>(j)] = det3(mj) / dt;
  }
  return x;
}

std::vector<cplx> lstsq(const std::vector<std::vector<cplx>>& a, const std::vector<cplx>& b) {
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  // Normal equations G = A^H A, y = A^H r.
  std::vector<std::vector<cplx>> g(cols, std::vector<cplx>(cols));
  double diag_scale = 0.0;
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = 0; j < cols; ++j) {
      cplx s = 0.0;
      for (size_t r = 0; r < rows; ++r) s += std::conj(a[r][i]) * a[r][j];
      g[i][j] = s;
    }
    diag_scale = std::max(diag_scale, std::abs(g[i][i]));
  }
  const double ridge = 1e-12 * std::max(diag_scale, 1e-300);
  for (size_t i = 0; i < cols; ++i) g[i][i] += ridge;

  // Cholesky factorization of the Hermitian positive definite G.
  std::vector<std::vector<cplx>> l(cols, std::vector<cplx>(cols));
  for (size_t i = 0; i < cols; ++i) {
    for (size_t j = 0; j <= i; ++j) {
      cplx s = g[i][j];
      for (size_t k = 0; k < j; ++k) s -= l[i][k] * std::conj(l[j][k]);
      if (i == j)
        l[i][j] = std::sqrt(std::max(s.real(), 1e-300));
      else
        l[i][j] = s / l[j][j];
    }
  }
  auto solve_normal = [&](const std::vector<cplx>& rhs) {
    std::vector<cplx> y(cols), x(cols);
    for (size_t i = 0; i < cols; ++i) {
      cplx s = rhs[i];
      for (size_t k = 0; k < i; ++k) s -= l[i][k] * y[k];
      y[i] = s / l[i][i];
    }
    for (size_t i = cols; i-- > 0;) {
      cplx s = y[i];
      for (size_t k = i + 1; k < cols; ++k) s -= std::conj(l[k][i]) * x[k];
      x[i] = s / l[i][i];
    }
    return x;
  };

  std::vector<cplx> x(cols, 0.0);
  std::vector<cplx> resid = b;
  for (int iter = 0; iter < 3; ++iter) {
    std::vector<cplx> aty(cols);
    for (size_t i = 0; i < cols; ++i) {
      cplx s = 0.0;
      for (size_t r = 0; r < rows; ++r) s += std::conj(a[r][i]) * resid[r];
      aty[i] = s;
    }
    const std::vector<cplx> dx = solve_normal(aty);
    for (size_t i = 0; i < cols; ++i) x[i] += dx[i];
    for (size_t r = 0; r < rows; ++r) {
      cplx s = b[r];
      for (size_t i = 0; i < cols; ++i) s -= a[r][i] * x[i];
      resid[r] = s;
    }
  }
  return x;
}

}  // namespace tw4p
