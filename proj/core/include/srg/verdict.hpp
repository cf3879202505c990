#pragma once

#include "srg/reflect.hpp"
#include "srg/rigidity.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srg {

struct no_data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One row of the embedded dataset of externally computed module data
// (dataset version "champ-v1"): the minimal k with L(lambda)_k = 0, the
// first admissible family index d_1 = d1_multiplier * d_0, and the central
// exponent m of the chosen character.
struct ChampRecord {
  FamilySpec g0;
  int st_number = 0;
  std::string character_label;
  int champ_index = 0;
  unsigned k = 0;
  unsigned d1_multiplier = 0;
  unsigned m = 0;
  bool has_data = false;
  unsigned published_lower_bound = 0; // source table's bound column

  unsigned d1() const { return d1_multiplier * g0.d; }
};

enum class CaseStage { ExcludedCrude, ExcludedRefined, Open, SelfCase };

struct CaseStatus {
  FamilySpec g0;
  unsigned d = 0;
  CaseStage stage = CaseStage::Open;
};

const char* stage_name(CaseStage s);

// The 17 rank-2 reflection groups, in table order.
const std::vector<FamilySpec>& table1_specs();
int shephard_todd_number(const FamilySpec& g0);

const std::vector<ChampRecord>& champ_records();
const ChampRecord& champ_record(const FamilySpec& g0);

// N = |R(G_0)| by exhaustive scan (cached).
unsigned reflection_count_cached(const FamilySpec& g0);

// Smallest d satisfying the crude existence bound: 2N + 7 for muT/muO/muI,
// N + 4 for OT.
unsigned crude_minimal_d(const FamilySpec& g0);

// Valid family indices with largest reflection subgroup g0 that survive the
// crude bound (d = d_0 stays as SelfCase, d < bound as Open).
std::vector<CaseStatus> open_after_crude(const FamilySpec& g0);

// True iff d >= d_1 and d - (k-1) - m > d/2 + 1 (muT/muO/muI) resp.
// d - (k-1) - m > 1 (OT). Throws no_data_error when the record carries no
// data; the caller falls back to the crude status.
bool refined_exclude(const ChampRecord& record, unsigned d);

// Smallest positive integer d satisfying the record's refined inequality
// (the bound column recomputed from k and m).
unsigned recomputed_lower_bound(const ChampRecord& record);

// Crude-stage survivors filtered through refined_exclude; no-data rows pass
// through unchanged.
std::vector<CaseStatus> open_after_refined(const std::vector<ChampRecord>& all_records);
std::vector<CaseStatus> open_after_refined();

// True iff the index window {d-(span-1)-m, ..., d-m} taken mod d avoids the
// kind's forbidden index set.
bool window_check(const FamilySpec& g0, unsigned d, unsigned span, unsigned m);

// --- table generation ------------------------------------------------------

struct ReflectionRow {
  FamilySpec g0;
  int st_number = 0;
  unsigned reflections = 0;
  unsigned minimal_d = 0;
};

std::vector<ReflectionRow> table_reflections();

struct ChampCheckRow {
  ChampRecord record;
  unsigned recomputed = 0; // 0 when no data
  bool match = false;      // recomputed == published
};

std::vector<ChampCheckRow> table_champ_check();

// --- subgroup-relation verification -----------------------------------------

enum class PairVerdict { ContainedVerified, AbsentCertified, Undetermined };

struct SubgroupCheck {
  FamilySpec sub;
  FamilySpec sup;
  bool expected_contained = false;       // entry of the subgroup-relation table
  PairVerdict verdict = PairVerdict::Undetermined;
  std::vector<std::string> certificates; // non-containment invariants that fired
  bool matches_table = false;
};

// Pairs recorded as contained in the subgroup-relation table.
const std::vector<std::pair<FamilySpec, FamilySpec>>& table2_positives();

// Checks every ordered pair of distinct table-1 groups: positive entries by
// literal elementwise containment in the fixed realizations, all other
// pairs by conjugation-invariant non-containment certificates
// ("order-divisibility", "centre-quotient", "determinant-set",
// "OT-divisibility", "charpoly-multiset"). A pair no certificate covers is
// reported Undetermined, never confirmed absent.
std::vector<SubgroupCheck> verify_table2();

// --- lemma suite ------------------------------------------------------------

struct LemmaCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kDefaultSeed = 20240613;

// The per-group structural verifications: centre order d, determinant set,
// D_d dihedral of order 2d and normal in E(G), G^vee and G_0^vee normal,
// the reflection inventory, the D_d-part class count, and the conjugation
// identity s g^vee s^-1 = ((det g)^-1 g)^vee on 100 seeded random elements.
std::vector<LemmaCheck> verify_lemmas(const FamilySpec& spec,
                                      std::uint64_t seed = kDefaultSeed);

} // namespace srg
