#pragma once

#include "srg/matrix.hpp"

#include <string>
#include <vector>

namespace srg {

// Dense univariate polynomials, index = degree, no trailing zeros
// (the zero polynomial is the empty vector).
using CPoly = std::vector<CycNumber>;
using QPoly = std::vector<Rational>;

CPoly cpoly_trim(CPoly p);
CPoly cpoly_add(const CPoly& a, const CPoly& b);
CPoly cpoly_sub(const CPoly& a, const CPoly& b);
CPoly cpoly_mul(const CPoly& a, const CPoly& b);
// quotient/remainder, divisor nonzero
std::pair<CPoly, CPoly> cpoly_divmod(const CPoly& a, const CPoly& b);
CPoly cpoly_monic(const CPoly& a);
CPoly cpoly_gcd(CPoly a, CPoly b); // monic
bool cpoly_is_zero(const CPoly& a);
int cpoly_deg(const CPoly& a); // -1 for zero

// det(I - t*g), the reversed characteristic polynomial of g.
CPoly det_one_minus_t(const CycMatrix& g);

// Exact rational function with rational coefficients, den(0) = 1,
// gcd(num, den) = 1.
struct RationalFunction {
  QPoly num;
  QPoly den;

  bool operator==(const RationalFunction&) const = default;
  std::string str() const; // "(...)/(...)" with "t" as the variable
  // power-series coefficients up to and including degree `upto`
  std::vector<Rational> series(unsigned upto) const;
};

// (1/|G|) sum over all elements of 1/det(1 - t g), summed exactly over the
// cyclotomic field and verified to have rational coefficients.
class FiniteMatrixGroup;
RationalFunction molien_series(const FiniteMatrixGroup& g);

// 1 / prod (1 - t^d) over the given degrees.
RationalFunction molien_of_degrees(const std::vector<unsigned>& degrees);

// If f = 1 / prod (1 - t^{d_i}), the multiset {d_i} (ascending); empty
// optional if f is not of that shape.
std::optional<std::vector<unsigned>> invariant_degrees(const RationalFunction& f);

} // namespace srg
