#include "hcx/exact/polynomial.hpp"

namespace hcx::exact {

Poly::Poly(Vec coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly::trim() {
  while (!coeffs_.empty() && exact::is_zero(coeffs_.back())) coeffs_.pop_back();
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  Vec d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(d));
}

Poly Poly::monic() const {
  if (is_zero()) return {};
  Rat inv = 1 / leading();
  return Poly(scale(inv, coeffs_));
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (exact::is_zero(coeffs_[i])) continue;
    if (!out.empty()) out += " + ";
    out += "(" + exact::to_string(coeffs_[i]) + ")";
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

Poly remainder(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial remainder: division by zero polynomial");
  Vec r = a.coefficients();
  const Vec& d = b.coefficients();
  const std::size_t db = d.size() - 1;
  while (r.size() > db && !r.empty()) {
    if (is_zero(r.back())) {
      r.pop_back();
      continue;
    }
    Rat f = r.back() / d.back();
    const std::size_t shift = r.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= f * d[i];
    r.pop_back();
  }
  return Poly(std::move(r));
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly characteristic_polynomial(const Mat& m) {
  if (!m.is_square()) throw InputError("characteristic_polynomial: matrix not square");
  const std::size_t n = m.rows();
  // c[k] is the coefficient of x^k; c[n] = 1.
  Vec c(n + 1);
  c[n] = 1;
  Mat mk(n, n);
  const Mat id = Mat::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = m * mk + c[n - k + 1] * id;
    Rat t = (m * mk).trace();
    c[n - k] = -t / Rat(static_cast<long>(k));
  }
  return Poly(std::move(c));
}

std::size_t squarefree_degree(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Poly g = gcd(p, p.derivative());
  return static_cast<std::size_t>(p.degree() - g.degree());
}

std::size_t distinct_eigenvalue_count(const Mat& m) {
  if (!m.is_square()) throw InputError("distinct_eigenvalue_count: matrix not square");
  if (m.rows() == 0) return 0;
  return squarefree_degree(characteristic_polynomial(m));
}

}  // namespace hcx::exact
