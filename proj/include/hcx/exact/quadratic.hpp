#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "hcx/errors.hpp"
#include "hcx/exact/rational.hpp"

namespace hcx::exact {

/// Element a + b*sqrt(D) of the real quadratic field Q(sqrt(D)); D must be a
/// positive non-square integer.
template <long D>
class Quadratic {
  static_assert(D > 1, "Quadratic<D> needs a positive non-square radicand");

 public:
  Quadratic() = default;
  Quadratic(Rat a) : a_(std::move(a)) {}  // NOLINT: implicit embedding of Q
  Quadratic(long a) : a_(a) {}            // NOLINT
  Quadratic(Rat a, Rat b) : a_(std::move(a)), b_(std::move(b)) {}

  static Quadratic root() { return {Rat(0), Rat(1)}; }

  const Rat& rational_part() const { return a_; }
  const Rat& irrational_part() const { return b_; }
  bool is_rational() const { return exact::is_zero(b_); }
  bool is_zero() const { return exact::is_zero(a_) && exact::is_zero(b_); }

  Quadratic conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - D b^2.
  Rat norm() const { return a_ * a_ - Rat(D) * b_ * b_; }

  double to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(double(D)); }

  Quadratic operator-() const { return {-a_, -b_}; }
  Quadratic& operator+=(const Quadratic& o) { a_ += o.a_; b_ += o.b_; return *this; }
  Quadratic& operator-=(const Quadratic& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
  Quadratic& operator*=(const Quadratic& o) {
    Rat a = a_ * o.a_ + Rat(D) * b_ * o.b_;
    Rat b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  Quadratic& operator/=(const Quadratic& o) {
    if (o.is_zero()) throw InputError("Quadratic: division by zero");
    Rat n = o.norm();
    *this *= o.conjugate();
    a_ /= n;
    b_ /= n;
    return *this;
  }

  friend Quadratic operator+(Quadratic x, const Quadratic& y) { return x += y; }
  friend Quadratic operator-(Quadratic x, const Quadratic& y) { return x -= y; }
  friend Quadratic operator*(Quadratic x, const Quadratic& y) { return x *= y; }
  friend Quadratic operator/(Quadratic x, const Quadratic& y) { return x /= y; }
  friend bool operator==(const Quadratic& x, const Quadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  /// Square root inside the field of a rational r >= 0, if one exists: either
  /// r is a rational square or r*D is.
  static std::optional<Quadratic> sqrt_of(const Rat& r) {
    if (sgn(r) < 0) return std::nullopt;
    if (auto q = rational_sqrt(r)) return Quadratic(*q);
    if (auto q = rational_sqrt(r * Rat(D))) return Quadratic(Rat(0), *q / Rat(D));
    return std::nullopt;
  }

  std::string to_string() const {
    if (is_rational()) return exact::to_string(a_);
    return exact::to_string(a_) + "+" + exact::to_string(b_) + "*sqrt(" + std::to_string(D) + ")";
  }

 private:
  static std::optional<Rat> rational_sqrt(const Rat& r) {
    mpz_class n = r.get_num(), d = r.get_den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
      return std::nullopt;
    mpz_class sn = sqrt(n), sd = sqrt(d);
    Rat out(sn, sd);
    out.canonicalize();
    return out;
  }

  Rat a_, b_;
};

template <long D>
bool is_zero(const Quadratic<D>& x) {
  return x.is_zero();
}

}  // namespace hcx::exact
