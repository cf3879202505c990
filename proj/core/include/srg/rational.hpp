#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace srg {

// Exact rational numbers. GMP keeps them canonical (gcd 1, positive
// denominator), which is what all hashing below relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool rat_is_zero(const Rational& r) { return sgn(r) == 0; }

std::size_t rat_hash(const Rational& r);

// "p" or "p/q", exact.
std::string rat_str(const Rational& r);
Rational rat_parse(const std::string& s);

// Appends the byte serialization of an integer (sign byte, u32 length,
// little-endian magnitude) resp. rational (num, den) to `out`.
void int_bytes(const mpz_class& z, std::string& out);
void rat_bytes(const Rational& r, std::string& out);

} // namespace srg
