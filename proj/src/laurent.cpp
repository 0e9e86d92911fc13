#include "tw4p/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace tw4p {

LaurentPoly::LaurentPoly(int lo, std::vector<cplx> coeffs) : lo_(lo), c_(std::move(coeffs)) {
  double m = 0.0;
  for (const cplx& z : c_) m = std::max(m, std::abs(z));
  if (m == 0.0) {
    c_.clear();
    lo_ = 0;
    return;
  }
  const double tol = kTrimRel * m;
  size_t first = 0, last = c_.size();
  while (first < last && std::abs(c_[first]) <= tol) ++first;
  while (last > first && std::abs(c_[last - 1]) <= tol) --last;
  if (first > 0 || last < c_.size()) {
    c_ = std::vector<cplx>(c_.begin() + static_cast<long>(first), c_.begin() + static_cast<long>(last));
    lo_ += static_cast<int>(first);
  }
  if (c_.empty()) lo_ = 0;
}

cplx LaurentPoly::eval(cplx lambda) const {
  if (zero()) return {};
  // Horner on the polynomial part from lo, then multiply by lambda^lo.
  cplx acc = 0.0;
  for (size_t k = c_.size(); k-- > 0;) acc = acc * lambda + c_[k];
  if (lo_ > 0) {
    for (int k = 0; k < lo_; ++k) acc *= lambda;
  } else if (lo_ < 0) {
    for (int k = 0; k < -lo_; ++k) acc /= lambda;
  }
  return acc;
}

double LaurentPoly::norm_inf() const {
  double m = 0.0;
  for (const cplx& z : c_) m = std::max(m, std::abs(z));
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  std::vector<cplx> c(c_);
  for (cplx& z : c) z = -z;
  return {lo_, std::move(c)};
}

LaurentPoly operator+(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.zero()) return g;
  if (g.zero()) return f;
  const int lo = std::min(f.lo_, g.lo_);
  const int hi = std::max(f.hi(), g.hi());
  std::vector<cplx> c(static_cast<size_t>(hi - lo + 1));
  for (int k = f.lo_; k <= f.hi(); ++k) c[static_cast<size_t>(k - lo)] += f.coeff(k);
  for (int k = g.lo_; k <= g.hi(); ++k) c[static_cast<size_t>(k - lo)] += g.coeff(k);
  return {lo, std::move(c)};
}

LaurentPoly operator-(const LaurentPoly& f, const LaurentPoly& g) { return f + (-g); }

LaurentPoly operator*(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.zero() || g.zero()) return {};
  std::vector<cplx> c(f.c_.size() + g.c_.size() - 1);
  for (size_t a = 0; a < f.c_.size(); ++a)
    for (size_t b = 0; b < g.c_.size(); ++b) c[a + b] += f.c_[a] * g.c_[b];
  return {f.lo_ + g.lo_, std::move(c)};
}

LaurentPoly operator*(cplx a, const LaurentPoly& f) {
  std::vector<cplx> c(f.c_);
  for (cplx& z : c) z *= a;
  return {f.lo_, std::move(c)};
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (zero()) return {};
  return {lo_ + k, c_};
}

LaurentPoly star(const LaurentPoly& f) {
  if (f.zero()) return {};
  const int lo = -f.hi();
  std::vector<cplx> c(f.coeffs().size());
  for (int k = f.lo(); k <= f.hi(); ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    c[static_cast<size_t>(-k - lo)] = sign * std::conj(f.coeff(k));
  }
  return {lo, std::move(c)};
}

LaurentPoly neg_part(const LaurentPoly& f) {
  if (f.zero() || f.lo() >= 0) return {};
  const int hi = std::min(f.hi(), -1);
  std::vector<cplx> c(static_cast<size_t>(hi - f.lo() + 1));
  for (int k = f.lo(); k <= hi; ++k) c[static_cast<size_t>(k - f.lo())] = f.coeff(k);
  return {f.lo(), std::move(c)};
}

LaurentPoly pos_part(const LaurentPoly& f) {
  if (f.zero() || f.hi() <= 0) return {};
  const int lo = std::max(f.lo(), 1);
  std::vector<cplx> c(static_cast<size_t>(f.hi() - lo + 1));
  for (int k = lo; k <= f.hi(); ++k) c[static_cast<size_t>(k - lo)] = f.coeff(k);
  return {lo, std::move(c)};
}

cplx const_coeff(const LaurentPoly& f) { return f.coeff(0); }

LaurentPoly neg_star(const LaurentPoly& f) { return star(neg_part(f)); }

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& f, const LaurentPoly& d) {
  if (d.zero()) throw std::invalid_argument("divmod: division by zero polynomial");
  if ((!f.zero() && f.lo() < 0) || d.lo() < 0)
    throw std::invalid_argument("divmod: operands must be ordinary polynomials (lo >= 0)");
  const int dd = d.deg();
  const cplx lead = d.coeff(dd);
  // Dense remainder from degree 0.
  std::vector<cplx> r(static_cast<size_t>(std::max(f.zero() ? 0 : f.deg(), 0) + 1));
  for (int k = 0; k < static_cast<int>(r.size()); ++k) r[static_cast<size_t>(k)] = f.coeff(k);
  const int qdeg = static_cast<int>(r.size()) - 1 - dd;
  if (qdeg < 0) return {LaurentPoly{}, f};
  std::vector<cplx> q(static_cast<size_t>(qdeg + 1));
  for (int k = qdeg; k >= 0; --k) {
    const cplx factor = r[static_cast<size_t>(k + dd)] / lead;
    q[static_cast<size_t>(k)] = factor;
    for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(k + j)] -= factor * d.coeff(j);
  }
  r.resize(static_cast<size_t>(dd));
  return {LaurentPoly{0, std::move(q)}, LaurentPoly{0, std::move(r)}};
}

}  // namespace tw4p
