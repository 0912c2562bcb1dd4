#include "hcx/exact/rational.hpp"

#include <cassert>

#include "hcx/errors.hpp"

namespace hcx::exact {

Rat make_rat(long num, long den) {
  if (den == 0) throw InputError("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw InputError("parse_rat: empty string");
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("parse_rat: not a rational: " + s);
  if (sgn(r.get_den()) == 0) throw InputError("parse_rat: zero denominator: " + s);
  r.canonicalize();
  return r;
}

Vec zeros(std::size_t n) { return Vec(n); }

Vec unit(std::size_t n, std::size_t i) {
  assert(i < n);
  Vec v(n);
  v[i] = 1;
  return v;
}

bool is_zero(std::span<const Rat> v) {
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

Vec add(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("add: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec sub(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("sub: length mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec scale(const Rat& s, std::span<const Rat> v) {
  Vec out(v.size());
  if (is_zero(s)) return out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out[i] = s * v[i];
  return out;
}

Rat dot(std::span<const Rat> a, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("dot: length mismatch");
  Rat acc;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!is_zero(a[i]) && !is_zero(b[i])) acc += a[i] * b[i];
  return acc;
}

void axpy(Vec& a, const Rat& s, std::span<const Rat> b) {
  if (a.size() != b.size()) throw InputError("axpy: length mismatch");
  if (is_zero(s)) return;
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!is_zero(b[i])) a[i] += s * b[i];
}

std::string to_string(std::span<const Rat> v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + "]";
}

}  // namespace hcx::exact
