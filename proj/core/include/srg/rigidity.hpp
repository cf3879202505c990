#pragma once

#include "srg/families.hpp"

#include <vector>

namespace srg {

// The two behaviours of the rigidity rules: families muT/muO/muI together
// (two classes of anti-diagonal reflections) versus OT (one class).
enum class RigidityKind { ABC, D };

inline RigidityKind rigidity_kind(FamilyKindId k) {
  return k == FamilyKindId::OT ? RigidityKind::D : RigidityKind::ABC;
}

// Irreducible representations of the dihedral group of order 2d (d even):
// four linear ones and the 2-dimensional Phi(i), 1 <= i <= d/2 - 1.
struct DihedralIrrep {
  enum class Label { Triv, Sgn, V1, V2, Phi };
  Label label = Label::Triv;
  unsigned i = 0; // only for Phi
  unsigned d = 2;
};

std::vector<DihedralIrrep> all_irreps(unsigned d);

// index of an irreducible character of the centre mu_d, 0 <= index < d
struct CentralCharacter {
  unsigned index = 0;
};

// Restriction to the centre: Triv, Sgn -> {0}; V1, V2 -> {d/2};
// Phi(i) -> {i, d-i}.
std::vector<CentralCharacter> restrict_to_centre(const DihedralIrrep& rep);

unsigned irrep_dim(const DihedralIrrep& rep);

// Rigid for every admissible parameter: Phi(i) with 1 < i < (d-2)/2 for
// kind ABC; Phi(i) with 1 < i <= (d-2)/2 or V1/V2 for kind D.
bool always_rigid(const DihedralIrrep& rep, RigidityKind kind);

// Index sets whose characters are never rigidity-safe.
// ABC: {0, 1, d/2-1, d/2, d/2+1, d-1} (the d/2 entries only when d is even);
// D: {0, 1, d-1}. Indices taken mod d.
std::vector<unsigned> forbidden_indices(RigidityKind kind, unsigned d);

bool all_constituents_rigid(const std::vector<CentralCharacter>& restriction,
                            RigidityKind kind, unsigned d);

} // namespace srg
