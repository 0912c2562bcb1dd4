#pragma once

#include <cstddef>
#include <string>

#include "hcx/exact/matrix.hpp"
#include "hcx/exact/rational.hpp"

namespace hcx::exact {

/// Univariate polynomial over Q, coefficients from the constant term up.
/// Trailing zeros are trimmed, so the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Vec coeffs);

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Vec& coefficients() const { return coeffs_; }
  const Rat& leading() const { return coeffs_.back(); }

  Poly derivative() const;
  Poly monic() const;
  Rat operator()(const Rat& x) const;

  friend bool operator==(const Poly&, const Poly&) = default;

  std::string to_string() const;

 private:
  void trim();
  Vec coeffs_;
};

/// Remainder of a divided by b (b nonzero).
Poly remainder(const Poly& a, const Poly& b);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// det(x I - m), monic, by Faddeev-LeVerrier (exact in characteristic 0).
Poly characteristic_polynomial(const Mat& m);

/// Number of distinct complex roots: degree of p / gcd(p, p').
std::size_t squarefree_degree(const Poly& p);

/// Number of distinct complex eigenvalues of a square rational matrix.
std::size_t distinct_eigenvalue_count(const Mat& m);

}  // namespace hcx::exact
