#pragma once

#include "srg/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace srg {

struct cyclo_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct invalid_conductor_error : cyclo_error {
  using cyclo_error::cyclo_error;
};
struct division_by_zero_error : cyclo_error {
  using cyclo_error::cyclo_error;
};
struct embedding_error : cyclo_error {
  using cyclo_error::cyclo_error;
};

unsigned euler_phi(unsigned n);

// An element of the cyclotomic field Q(zeta_n), zeta_n the distinguished
// primitive n-th root of unity (all fields are compatibly embedded via
// zeta_n^{n/m} = zeta_m for m | n).
//
// Representation: stated conductor n plus the coefficient vector of the
// power basis 1, zeta, ..., zeta^{phi(n)-1} of Q(zeta_n) (reduction modulo
// the n-th cyclotomic polynomial happens on construction). Equality is
// semantic: x == y iff they are the same complex number. canonical()
// additionally compresses the conductor to the smallest m with x in
// Q(zeta_m); two equal values always have identical canonical forms, which
// is what hashing and serialization use.
class CycNumber {
public:
  CycNumber() : n_(1), c_(1, Rational(0)) {}
  CycNumber(const Rational& r) : n_(1), c_(1, r) {}
  CycNumber(long v) : n_(1), c_(1, Rational(v)) {}

  // Coefficients of zeta_n^0..zeta_n^{deg} (any degree < n); reduced here.
  static CycNumber from_powers(unsigned n, std::vector<Rational> coeffs);

  unsigned conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  // Requires is_rational().
  Rational to_rational() const;

  CycNumber canonical() const;

  // Rewrites to stated conductor m; requires conductor() | m.
  CycNumber embedded(unsigned m) const;

  CycNumber operator-() const;
  CycNumber inv() const;  // throws division_by_zero_error on 0
  CycNumber conj() const; // zeta_n -> zeta_n^{-1}
  CycNumber pow(long k) const;

  friend CycNumber operator+(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator-(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator*(const CycNumber& a, const CycNumber& b);
  friend CycNumber operator/(const CycNumber& a, const CycNumber& b);
  friend bool operator==(const CycNumber& a, const CycNumber& b);
  friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

  std::size_t hash() const; // hash of the canonical form

  // Canonical byte serialization; layout documented in serialize.hpp.
  std::string bytes() const;

  // "c0 + c1*z(n)^1 + ..." with exact rationals, and its inverse.
  std::string str() const;
  static CycNumber parse(const std::string& s);

private:
  unsigned n_;
  std::vector<Rational> c_; // size phi(n_), power basis
  friend class CycTables;
};

// zeta_n^k (k arbitrary; taken mod n). n = 0 raises invalid_conductor_error.
CycNumber root_of_unity(unsigned n, long k);

inline CycNumber cyc_i() { return root_of_unity(4, 1); }

struct CycHash {
  std::size_t operator()(const CycNumber& x) const { return x.hash(); }
};

} // namespace srg
