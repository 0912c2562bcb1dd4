#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcx::exact {

/// Exact rational number. gmpxx keeps every arithmetic result canonical
/// (lowest terms, positive denominator).
using Rat = mpq_class;

/// Dense vector of rationals.
using Vec = std::vector<Rat>;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

/// Builds num/den in lowest terms.
Rat make_rat(long num, long den = 1);

/// Serialises as "p/q", always with an explicit denominator ("3/1", "0/1").
std::string to_string(const Rat& x);

/// Accepts "p/q" or a bare integer "p". Throws InputError on garbage.
Rat parse_rat(std::string_view text);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rat> v);

Vec add(std::span<const Rat> a, std::span<const Rat> b);
Vec sub(std::span<const Rat> a, std::span<const Rat> b);
Vec scale(const Rat& s, std::span<const Rat> v);
Rat dot(std::span<const Rat> a, std::span<const Rat> b);

/// a += s * b, skipping zero entries of b.
void axpy(Vec& a, const Rat& s, std::span<const Rat> b);

std::string to_string(std::span<const Rat> v);

}  // namespace hcx::exact
