#pragma once

#include "srg/matrix.hpp"
#include "srg/pool.hpp"

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace srg {

struct group_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
// Closure exceeded the element cap: wrong construction or infinite group.
struct closure_overflow_error : group_error {
  using group_error::group_error;
};
struct containment_error : group_error {
  using group_error::group_error;
};
struct partition_error : group_error {
  using group_error::group_error;
};
struct invariance_error : group_error {
  using group_error::group_error;
};

constexpr std::size_t kDefaultCap = 200000;

// A subspace of C^ambient given by linearly independent coordinate vectors.
struct Subspace {
  int ambient = 0;
  std::vector<CycVector> basis;

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const CycVector& v) const;
  // canonical form: RREF of the basis rows (span-equality comparisons)
  std::vector<CycVector> rref_basis() const;
};

Subspace make_subspace(int ambient, std::vector<CycVector> basis); // checks rank

// Finite subgroup of GL_dim given by generators, with an optionally
// enumerated element set. Enumerated groups are immutable; all operations
// below return new values.
class FiniteMatrixGroup {
public:
  FiniteMatrixGroup() = default;
  explicit FiniteMatrixGroup(std::vector<CycMatrix> generators);
  static FiniteMatrixGroup trivial(int dim);

  int dim() const { return dim_; }
  const std::vector<EMat>& egens() const { return gens_; }
  std::vector<CycMatrix> generators() const;

  bool enumerated() const { return elements_ != nullptr; }
  std::size_t order() const;
  const ElementSet& eset() const;
  CycMatrix element(std::size_t i) const;
  bool contains(const CycMatrix& m) const;
  bool contains(const EMat& m) const;

  // internal assembly: `set` must be the closure of the generators
  static FiniteMatrixGroup from_parts(std::vector<EMat> gens,
                                      std::shared_ptr<const ElementSet> set);

private:
  int dim_ = 0;
  std::vector<EMat> gens_;
  std::shared_ptr<const ElementSet> elements_;
};

// Dimino closure of the generators. Deterministic element set independent
// of generator order; throws closure_overflow_error past `cap`.
FiniteMatrixGroup enumerate(const FiniteMatrixGroup& g, std::size_t cap = kDefaultCap);

// Closure of a generator list directly to an ElementSet.
std::shared_ptr<ElementSet> dimino_closure(ValuePool& p, int dim,
                                           const std::vector<EMat>& gens,
                                           std::size_t cap);

// Checks that an assembled element set is the closure of g's generators:
// identity and generators inside, closed under left multiplication by each
// generator. Throws group_error on failure.
void verify_group_closure(const FiniteMatrixGroup& g);

// Subgroup of elements commuting with every generator, enumerated.
FiniteMatrixGroup centre(const FiniteMatrixGroup& g);

// True iff x h x^-1 in sub for all generators x of g, h in sub.
// Requires sub's elements to be contained in g's (containment_error).
bool is_normal(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& g);

struct ConjClass {
  CycMatrix rep;                 // lexicographically least serialization
  std::vector<CycMatrix> members;
};

// Partition of `subset` into orbits under conjugation by g. The subset must
// be contained in g and closed under g-conjugation (partition_error).
// Classes ordered by representative bytes.
std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g,
                                         const std::vector<CycMatrix>& subset);

struct OrbitStabilizer {
  std::vector<CycVector> orbit;
  FiniteMatrixGroup stabilizer; // enumerated, with Schreier generating set
};

// Orbit of v under g and its stabilizer via Schreier generators.
OrbitStabilizer orbit_stabilizer(const FiniteMatrixGroup& g, const CycVector& v,
                                 std::size_t cap = kDefaultCap);

// Stabilizer by filtering the full element set (test oracle for the above).
FiniteMatrixGroup stabilizer_by_filter(const FiniteMatrixGroup& g, const CycVector& v);

// Averaging projector P = (1/|G|) sum_g g.
CycMatrix averaging_projector(const FiniteMatrixGroup& g);

// Image of the averaging projector (the fixed space V^G), canonical basis.
Subspace fixed_space(const FiniteMatrixGroup& g);

// Kernel of the averaging projector; checks that `fixed` equals its image.
Subspace invariant_complement(const FiniteMatrixGroup& g, const Subspace& fixed);

// The matrices of g's action on `sub` in the given basis. Every generator
// must leave the subspace invariant (invariance_error). Result enumerated.
FiniteMatrixGroup restrict_to(const FiniteMatrixGroup& g, const Subspace& sub);

FiniteMatrixGroup conjugate_group(const CycMatrix& x, const FiniteMatrixGroup& g);

// Membership of all generators of sub in g's element set.
bool is_subgroup_of(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& g);

// On-disk element-set cache (format in serialize.hpp). save returns false
// on IO failure; load returns nullopt on missing/invalid/mismatching file.
bool save_elements(const FiniteMatrixGroup& g, const std::string& path);
std::optional<FiniteMatrixGroup> load_elements(const std::vector<CycMatrix>& generators,
                                               const std::string& path);

} // namespace srg
