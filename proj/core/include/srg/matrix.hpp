#pragma once

#include "srg/cyclo.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srg {

struct shape_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct singular_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Dense square matrix over CycNumber, row-major.
class CycMatrix {
public:
  CycMatrix() : dim_(0) {}
  explicit CycMatrix(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * dim) {}
  CycMatrix(int dim, std::vector<CycNumber> entries);

  static CycMatrix identity(int dim);
  static CycMatrix zero(int dim) { return CycMatrix(dim); }
  static CycMatrix scalar(int dim, const CycNumber& c);

  int dim() const { return dim_; }
  const CycNumber& at(int i, int j) const { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  CycNumber& at(int i, int j) { return e_[static_cast<std::size_t>(i) * dim_ + j]; }
  const std::vector<CycNumber>& entries() const { return e_; }

  CycMatrix transpose() const;
  CycMatrix inverse() const; // throws singular_error
  CycNumber det() const;
  CycNumber trace() const;
  // Coefficients of det(t I - A), degree dim, monic.
  std::vector<CycNumber> charpoly() const;
  int rank() const;
  bool is_identity() const;
  bool is_zero() const;

  friend CycMatrix operator*(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator+(const CycMatrix& a, const CycMatrix& b);
  friend CycMatrix operator-(const CycMatrix& a, const CycMatrix& b);
  CycMatrix operator-() const;
  friend CycMatrix operator*(const CycNumber& c, const CycMatrix& a);
  friend bool operator==(const CycMatrix& a, const CycMatrix& b);
  friend bool operator!=(const CycMatrix& a, const CycMatrix& b) { return !(a == b); }

  std::vector<CycNumber> apply(const std::vector<CycNumber>& v) const;

  // Canonical byte serialization; layout documented in serialize.hpp.
  std::string bytes() const;
  std::size_t hash() const;

private:
  int dim_;
  std::vector<CycNumber> e_;
};

using CycVector = std::vector<CycNumber>;

// Reduced row echelon form of a (possibly rectangular) matrix given as rows.
// Returns pivot column indices; `rows` is replaced by its RREF.
std::vector<int> rref(std::vector<CycVector>& rows);

int rank_of(std::vector<CycVector> rows);

// Basis of the null space {x : A x = 0} of the rows-matrix A, canonical
// (from the RREF free-variable parametrization).
std::vector<CycVector> null_space(std::vector<CycVector> rows);

// Solves A x = b for column vector b where A is given by rows;
// returns nullopt if inconsistent.
std::optional<CycVector> solve(std::vector<CycVector> rows, CycVector b);

bool vec_is_zero(const CycVector& v);

} // namespace srg
