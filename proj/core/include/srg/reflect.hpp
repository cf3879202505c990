#pragma once

#include "srg/families.hpp"

namespace srg {

// A structural claim failed on a concrete element; `witness` serializes it.
struct lemma_violation_error : std::runtime_error {
  lemma_violation_error(const std::string& what, std::string witness_bytes)
      : std::runtime_error(what), witness(std::move(witness_bytes)) {}
  std::string witness;
};

// rank(g - I) == 1 on 2x2 input.
bool is_complex_reflection(const CycMatrix& g);
// rank(t - I) == 2 on 4x4 symplectic input.
bool is_symplectic_reflection(const CycMatrix& t);

// The complex reflections of a rank-2 group, by exhaustive rank test.
std::vector<CycMatrix> complex_reflections(const FiniteMatrixGroup& g);

// |R(G_0)| for one of the 17 reflection groups.
unsigned reflection_count(const FamilySpec& spec0);

struct ReflectionInventory {
  DerivedSpec group;                          // base spec, object EG
  std::vector<CycMatrix> complex_reflections; // R(G), in G
  std::vector<CycMatrix> symplectic_reflections; // S(E(G)), brute force
  std::vector<CycMatrix> g0vee_part;          // the R(G)^vee part
  std::vector<CycMatrix> dd_part;             // the {z^vee s} part
  std::vector<ConjClass> classes;             // E(G)-classes of all of S(E(G))
  std::vector<ConjClass> dd_classes;          // E(G)-classes of the D_d part
  unsigned n_reflections = 0;                 // N = |R(G_0)|
};

// Scans all of E(G) for symplectic reflections and verifies, element by
// element, that they are exactly R(G)^vee disjoint-union {z^vee s | z in
// mu_d}, that R(G) = R(G_0), and the conjugacy class counts of the D_d
// part (2 for muT/muO/muI, 1 for OT). Any mismatch raises
// lemma_violation_error with a witness.
ReflectionInventory inventory(const FamilySpec& spec);

} // namespace srg
