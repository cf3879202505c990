#include "srg/rigidity.hpp"

#include <algorithm>

namespace srg {

std::vector<DihedralIrrep> all_irreps(unsigned d) {
  if (d < 2 || d % 2 != 0)
    throw family_constraint_error("dihedral parameter must be even and >= 2");
  using L = DihedralIrrep::Label;
  std::vector<DihedralIrrep> out{{L::Triv, 0, d}, {L::Sgn, 0, d}, {L::V1, 0, d}, {L::V2, 0, d}};
  for (unsigned i = 1; i + 1 <= d / 2 && i <= d / 2 - 1; ++i)
    out.push_back({L::Phi, i, d});
  return out;
}

unsigned irrep_dim(const DihedralIrrep& rep) {
  return rep.label == DihedralIrrep::Label::Phi ? 2 : 1;
}

std::vector<CentralCharacter> restrict_to_centre(const DihedralIrrep& rep) {
  using L = DihedralIrrep::Label;
  unsigned d = rep.d;
  switch (rep.label) {
    case L::Triv:
    case L::Sgn:
      return {{0}};
    case L::V1:
    case L::V2:
      return {{d / 2}};
    case L::Phi:
      if (rep.i < 1 || rep.i > d / 2 - 1)
        throw family_constraint_error("Phi index out of range");
      return {{rep.i}, {(d - rep.i) % d}};
  }
  return {};
}

bool always_rigid(const DihedralIrrep& rep, RigidityKind kind) {
  using L = DihedralIrrep::Label;
  unsigned d = rep.d;
  switch (kind) {
    case RigidityKind::ABC:
      // 1 < i < (d-2)/2, strict on both sides
      return rep.label == L::Phi && rep.i > 1 && 2 * rep.i < d - 2;
    case RigidityKind::D:
      if (rep.label == L::V1 || rep.label == L::V2) return true;
      return rep.label == L::Phi && rep.i > 1 && 2 * rep.i <= d - 2;
  }
  return false;
}

std::vector<unsigned> forbidden_indices(RigidityKind kind, unsigned d) {
  std::vector<unsigned> out{0 % d, 1 % d, (d - 1) % d};
  if (kind == RigidityKind::ABC && d % 2 == 0) {
    out.push_back(d / 2 - 1);
    out.push_back(d / 2);
    out.push_back((d / 2 + 1) % d);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool all_constituents_rigid(const std::vector<CentralCharacter>& restriction,
                            RigidityKind kind, unsigned d) {
  std::vector<unsigned> bad = forbidden_indices(kind, d);
  for (const auto& chi : restriction)
    if (std::binary_search(bad.begin(), bad.end(), chi.index % d)) return false;
  return true;
}

} // namespace srg
