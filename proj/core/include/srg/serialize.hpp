#pragma once

// Binary-stable canonical serialization.
//
// All hashing, deduplication and caching of field elements and matrices is
// keyed on these byte strings. Two mathematically equal values always
// serialize identically (serialization goes through the canonical form).
//
// Integer        := sign:u8 (0 zero, 1 positive, 2 negative)
//                   len:u32le
//                   magnitude bytes, little-endian, no trailing zeros
// Rational       := Integer numerator, Integer denominator (den > 0, gcd 1)
// CycNumber      := conductor:u32le   (canonical, i.e. minimal)
//                   nterms:u32le
//                   nterms * { exponent:u32le, Rational }
//                   terms in increasing exponent order, exponents in the
//                   power basis 1, z, ..., z^{phi(conductor)-1}, all
//                   coefficients nonzero
// CycMatrix      := dim:u32le, dim*dim CycNumber entries in row-major order
//
// Element-set cache file (written by group.hpp's save_elements):
//   magic "SRGC", version:u32le = 1
//   dim:u32le, count:u64le
//   nvalues:u32le, nvalues * CycNumber       (value table)
//   count * dim*dim u32le indices into the value table

#include "srg/cyclo.hpp"
#include "srg/matrix.hpp"

namespace srg {

inline std::string cyc_bytes(const CycNumber& x) { return x.bytes(); }
inline std::string mat_bytes(const CycMatrix& m) { return m.bytes(); }

} // namespace srg
