#pragma once

#include "srg/group.hpp"

#include <string>
#include <vector>

namespace srg {

struct family_constraint_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct spec_parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The four families of rank-2 groups. The OT family is keyed by the centre
// order d (so OT:e is valid for even e not divisible by 8); muT/muO/muI are
// the scalar extensions mu_d T, mu_d O, mu_d I.
enum class FamilyKindId { MuT, MuO, MuI, OT };

struct FamilySpec {
  FamilyKindId kind = FamilyKindId::MuT;
  unsigned d = 6;

  bool operator==(const FamilySpec&) const = default;
  auto operator<=>(const FamilySpec&) const = default;
};

enum class DerivedObject { G, G0, EG, Dd, Z };

struct DerivedSpec {
  FamilySpec base;
  DerivedObject object = DerivedObject::G;
};

constexpr unsigned kMaxFamilyIndex = 240;

bool spec_valid(const FamilySpec& s);
void validate_spec(const FamilySpec& s); // throws family_constraint_error

std::string spec_str(const FamilySpec& s);       // "muT:6", "OT:12"
std::string derived_str(const DerivedSpec& s);   // "muT:6:EG"
FamilySpec parse_spec(const std::string& text);  // throws spec_parse_error
DerivedSpec parse_derived_spec(const std::string& text);

// Fixed realizations: T as the Hurwitz units over Q(i), O = <T, omega> with
// omega = diag(zeta_8, zeta_8^-1), I as an icosian realization over
// Q(zeta_20) containing T entry-for-entry. All enumerated, inside SL_2.
const FiniteMatrixGroup& binary_tetrahedral();
const FiniteMatrixGroup& binary_octahedral();
const FiniteMatrixGroup& binary_icosahedral();
const CycMatrix& omega_coset_rep();

// The scalar group mu_d in dimension dim, enumerated.
FiniteMatrixGroup mu_group(unsigned d, int dim);

// Group order by family: 12d, 24d, 60d, 24d.
std::size_t family_order(const FamilySpec& s);

// Assembles the group from its coset description and verifies closure.
FiniteMatrixGroup build(const FamilySpec& s);

// Exact set of determinants (mu_{d/2} for muT/muO/muI, mu_d for OT),
// sorted by canonical serialization.
std::vector<CycNumber> det_set(const FamilySpec& s);

struct ReflSubgroup {
  FamilySpec g0;
  unsigned d0 = 0;
  unsigned dprime = 0;
};

// The largest complex reflection subgroup G_0 and the index d' = d/d_0.
ReflSubgroup largest_reflection_subgroup(const FamilySpec& s);

// g^vee = diag(g, (g^T)^-1) and the fixed anti-diagonal involution s.
CycMatrix vee(const CycMatrix& g);
EMat evee(ValuePool& p, const EMat& g);
const CycMatrix& s_matrix();

// The symplectic form preserved by every E(G): [[0, I2], [-I2, 0]].
const CycMatrix& symplectic_form_4();
bool preserves_form(const CycMatrix& m, const CycMatrix& form);

// G^vee as a 4x4 group (elements mapped if enumerated).
FiniteMatrixGroup vee_group(const FiniteMatrixGroup& g);

// E(G) = {g^vee, g^vee s | g in G}, order 2|G|, and D_d = <mu_d^vee, s>.
FiniteMatrixGroup build_EG(const FamilySpec& s);
FiniteMatrixGroup build_Dd(const FamilySpec& s);

FiniteMatrixGroup build_derived(const DerivedSpec& s);

// All valid family indices d <= kMaxFamilyIndex for the kind, ascending.
std::vector<unsigned> valid_indices(FamilyKindId kind);

} // namespace srg
