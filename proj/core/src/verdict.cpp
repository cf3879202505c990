#include "srg/verdict.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace srg {

namespace {
ValuePool& P() { return ValuePool::global(); }

FamilySpec fs(FamilyKindId k, unsigned d) { return FamilySpec{k, d}; }
constexpr auto MuT = FamilyKindId::MuT;
constexpr auto MuO = FamilyKindId::MuO;
constexpr auto MuI = FamilyKindId::MuI;
constexpr auto OT = FamilyKindId::OT;
} // namespace

const char* stage_name(CaseStage s) {
  switch (s) {
    case CaseStage::ExcludedCrude: return "ExcludedCrude";
    case CaseStage::ExcludedRefined: return "ExcludedRefined";
    case CaseStage::Open: return "Open";
    case CaseStage::SelfCase: return "SelfCase";
  }
  return "?";
}

const std::vector<FamilySpec>& table1_specs() {
  static const std::vector<FamilySpec> specs = {
      fs(MuT, 6),  fs(MuT, 12), fs(MuO, 4),  fs(MuO, 8),  fs(MuO, 12), fs(MuO, 24),
      fs(MuI, 4),  fs(MuI, 6),  fs(MuI, 10), fs(MuI, 12), fs(MuI, 20), fs(MuI, 30),
      fs(MuI, 60), fs(OT, 2),   fs(OT, 4),   fs(OT, 6),   fs(OT, 12)};
  return specs;
}

int shephard_todd_number(const FamilySpec& g0) {
  static const std::map<FamilySpec, int> st = {
      {fs(MuT, 6), 5},   {fs(MuT, 12), 7},  {fs(MuO, 4), 13},  {fs(MuO, 8), 9},
      {fs(MuO, 12), 15}, {fs(MuO, 24), 11}, {fs(MuI, 4), 22},  {fs(MuI, 6), 20},
      {fs(MuI, 10), 16}, {fs(MuI, 12), 21}, {fs(MuI, 20), 17}, {fs(MuI, 30), 18},
      {fs(MuI, 60), 19}, {fs(OT, 2), 12},   {fs(OT, 4), 8},    {fs(OT, 6), 14},
      {fs(OT, 12), 10}};
  auto it = st.find(g0);
  if (it == st.end())
    throw family_constraint_error(spec_str(g0) + " is not a table-1 group");
  return it->second;
}

const std::vector<ChampRecord>& champ_records() {
  static const std::vector<ChampRecord> records = [] {
    auto rec = [](FamilySpec g0, const char* label, int idx, unsigned k,
                  unsigned mult, unsigned m, unsigned bound) {
      ChampRecord r;
      r.g0 = g0;
      r.st_number = shephard_todd_number(g0);
      r.character_label = label;
      r.champ_index = idx;
      r.k = k;
      r.d1_multiplier = mult;
      r.m = m;
      r.has_data = true;
      r.published_lower_bound = bound;
      return r;
    };
    auto nodata = [](FamilySpec g0) {
      ChampRecord r;
      r.g0 = g0;
      r.st_number = shephard_todd_number(g0);
      r.has_data = false;
      return r;
    };
    return std::vector<ChampRecord>{
        rec(fs(MuT, 6), "phi(3,4)", 19, 5, 3, 2, 15),
        rec(fs(MuT, 12), "phi(3,10)", 37, 7, 1, 2, 19),
        rec(fs(MuO, 4), "phi(2,1)", 7, 3, 5, 3, 11),
        rec(fs(MuO, 8), "phi(4,5)", 32, 7, 2, 3, 21),
        rec(fs(MuO, 12), "phi(3,10)''", 36, 11, 1, 2, 27),
        nodata(fs(MuO, 24)),
        rec(fs(MuI, 4), "phi(4,6)", 12, 1, 2, 2, 7),
        rec(fs(MuI, 6), "phi(3,10)'", 13, 1, 3, 2, 7),
        rec(fs(MuI, 10), "phi(5,8)", 39, 9, 1, 2, 23),
        nodata(fs(MuI, 12)),
        nodata(fs(MuI, 20)),
        nodata(fs(MuI, 30)),
        nodata(fs(MuI, 60)),
        rec(fs(OT, 2), "phi(2,1)", 3, 3, 5, 3, 7),
        rec(fs(OT, 4), "phi(4,5)", 15, 7, 5, 3, 11),
        rec(fs(OT, 6), "phi(2,4)", 14, 5, 3, 2, 9),
        rec(fs(OT, 12), "phi(3,10)'", 36, 11, 1, 2, 14),
    };
  }();
  return records;
}

const ChampRecord& champ_record(const FamilySpec& g0) {
  for (const auto& r : champ_records())
    if (r.g0 == g0) return r;
  throw family_constraint_error("no champ record for " + spec_str(g0));
}

unsigned reflection_count_cached(const FamilySpec& g0) {
  static std::map<FamilySpec, unsigned> cache;
  auto it = cache.find(g0);
  if (it != cache.end()) return it->second;
  unsigned n = reflection_count(g0);
  cache.emplace(g0, n);
  return n;
}

unsigned crude_minimal_d(const FamilySpec& g0) {
  unsigned n = reflection_count_cached(g0);
  return g0.kind == OT ? n + 4 : 2 * n + 7;
}

std::vector<CaseStatus> open_after_crude(const FamilySpec& g0) {
  validate_spec(g0);
  unsigned bound = crude_minimal_d(g0);
  std::vector<CaseStatus> out;
  for (unsigned d : valid_indices(g0.kind)) {
    if (largest_reflection_subgroup(fs(g0.kind, d)).g0 != g0) continue;
    if (d == g0.d) {
      out.push_back({g0, d, CaseStage::SelfCase});
    } else if (d < bound) {
      out.push_back({g0, d, CaseStage::Open});
    }
  }
  return out;
}

bool refined_exclude(const ChampRecord& record, unsigned d) {
  if (!record.has_data)
    throw no_data_error("no module data for " + spec_str(record.g0));
  FamilySpec s = fs(record.g0.kind, d);
  validate_spec(s);
  if (largest_reflection_subgroup(s).g0 != record.g0)
    throw family_constraint_error(spec_str(s) + " does not belong to the " +
                                  spec_str(record.g0) + " family");
  if (d < record.d1()) return false;
  long lhs = static_cast<long>(d) - static_cast<long>(record.k - 1) -
             static_cast<long>(record.m);
  if (record.g0.kind == OT) return lhs > 1;
  return 2 * lhs > static_cast<long>(d) + 2; // lhs > d/2 + 1, exactly
}

unsigned recomputed_lower_bound(const ChampRecord& record) {
  if (!record.has_data)
    throw no_data_error("no module data for " + spec_str(record.g0));
  for (unsigned d = 1;; ++d) {
    long lhs = static_cast<long>(d) - static_cast<long>(record.k - 1) -
               static_cast<long>(record.m);
    bool ok = record.g0.kind == OT ? lhs > 1 : 2 * lhs > static_cast<long>(d) + 2;
    if (ok) return d;
  }
}

std::vector<CaseStatus> open_after_refined(const std::vector<ChampRecord>& all_records) {
  std::vector<CaseStatus> out;
  for (const auto& record : all_records) {
    for (const CaseStatus& c : open_after_crude(record.g0)) {
      if (c.stage == CaseStage::SelfCase) {
        out.push_back(c);
        continue;
      }
      if (record.has_data && refined_exclude(record, c.d)) continue;
      out.push_back(c);
    }
  }
  return out;
}

std::vector<CaseStatus> open_after_refined() { return open_after_refined(champ_records()); }

bool window_check(const FamilySpec& g0, unsigned d, unsigned span, unsigned m) {
  if (d == 0 || span == 0) throw family_constraint_error("window needs d, span >= 1");
  std::vector<unsigned> bad = forbidden_indices(rigidity_kind(g0.kind), d);
  long lo = static_cast<long>(d) - static_cast<long>(span - 1) - static_cast<long>(m);
  for (unsigned j = 0; j < span; ++j) {
    long idx = (lo + static_cast<long>(j)) % static_cast<long>(d);
    if (idx < 0) idx += d;
    if (std::binary_search(bad.begin(), bad.end(), static_cast<unsigned>(idx)))
      return false;
  }
  return true;
}

std::vector<ReflectionRow> table_reflections() {
  std::vector<ReflectionRow> rows;
  for (const FamilySpec& g0 : table1_specs()) {
    ReflectionRow r;
    r.g0 = g0;
    r.st_number = shephard_todd_number(g0);
    r.reflections = reflection_count_cached(g0);
    r.minimal_d = crude_minimal_d(g0);
    rows.push_back(r);
  }
  return rows;
}

std::vector<ChampCheckRow> table_champ_check() {
  std::vector<ChampCheckRow> rows;
  for (const ChampRecord& rec : champ_records()) {
    ChampCheckRow row;
    row.record = rec;
    if (rec.has_data) {
      row.recomputed = recomputed_lower_bound(rec);
      row.match = row.recomputed == rec.published_lower_bound;
    } else {
      row.recomputed = 0;
      row.match = true; // nothing to compare
    }
    rows.push_back(row);
  }
  return rows;
}

const std::vector<std::pair<FamilySpec, FamilySpec>>& table2_positives() {
  static const std::vector<std::pair<FamilySpec, FamilySpec>> entries = [] {
    std::vector<std::pair<FamilySpec, FamilySpec>> e;
    auto row = [&](FamilySpec sub, std::initializer_list<FamilySpec> sups) {
      for (const FamilySpec& s : sups) e.emplace_back(sub, s);
    };
    row(fs(MuT, 6), {fs(MuT, 12), fs(MuO, 12), fs(MuO, 24), fs(MuI, 6), fs(MuI, 12),
                     fs(MuI, 30), fs(MuI, 60), fs(OT, 6), fs(OT, 12)});
    row(fs(MuT, 12), {fs(MuO, 12), fs(MuO, 24), fs(MuI, 12), fs(MuI, 60), fs(OT, 12)});
    row(fs(MuO, 4), {fs(MuO, 8), fs(MuO, 12), fs(MuO, 24)});
    row(fs(MuO, 8), {fs(MuO, 24)});
    row(fs(MuO, 12), {fs(MuO, 24)});
    row(fs(MuI, 4), {fs(MuI, 12), fs(MuI, 20), fs(MuI, 60)});
    row(fs(MuI, 6), {fs(MuI, 12), fs(MuI, 30), fs(MuI, 60)});
    row(fs(MuI, 10), {fs(MuI, 20), fs(MuI, 30), fs(MuI, 60)});
    row(fs(MuI, 12), {fs(MuI, 60)});
    row(fs(MuI, 20), {fs(MuI, 60)});
    row(fs(MuI, 30), {fs(MuI, 60)});
    row(fs(OT, 2), {fs(MuO, 4), fs(MuO, 8), fs(MuO, 12), fs(MuO, 24), fs(OT, 6)});
    row(fs(OT, 4), {fs(MuO, 8), fs(MuO, 24), fs(OT, 12)});
    row(fs(OT, 6), {fs(MuO, 12), fs(MuO, 24)});
    row(fs(OT, 12), {fs(MuO, 24)});
    return e;
  }();
  return entries;
}

namespace {

struct GroupFingerprint {
  std::size_t order = 0;
  std::size_t centre_order = 0;
  std::vector<std::string> det_keys;                 // sorted canonical keys
  std::map<std::pair<std::string, std::string>, int> charpoly_counts; // (tr, det)
};

const GroupFingerprint& fingerprint(const FamilySpec& s) {
  static std::map<FamilySpec, GroupFingerprint> cache;
  auto it = cache.find(s);
  if (it != cache.end()) return it->second;
  GroupFingerprint f;
  FiniteMatrixGroup g = build(s);
  f.order = g.order();
  f.centre_order = centre(g).order();
  for (const CycNumber& x : det_set(s)) f.det_keys.push_back(x.bytes());
  std::sort(f.det_keys.begin(), f.det_keys.end());
  const ElementSet& set = g.eset();
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto m = set.at(i);
    Vid tr = P().add(m[0], m[3]);
    Vid det = P().sub(P().mul(m[0], m[3]), P().mul(m[1], m[2]));
    f.charpoly_counts[{P().key(tr), P().key(det)}] += 1;
  }
  return cache.emplace(s, std::move(f)).first->second;
}

std::vector<std::string> non_containment_certificates(const FamilySpec& sub,
                                                      const FamilySpec& sup) {
  std::vector<std::string> certs;
  const GroupFingerprint& h = fingerprint(sub);
  const GroupFingerprint& g = fingerprint(sup);
  if (g.order % h.order != 0) certs.push_back("order-divisibility");
  if (h.order / h.centre_order > g.order / g.centre_order)
    certs.push_back("centre-quotient");
  if (!std::includes(g.det_keys.begin(), g.det_keys.end(), h.det_keys.begin(),
                     h.det_keys.end()))
    certs.push_back("determinant-set");
  if (sub.kind == OT && sup.kind == OT) {
    bool rule = sup.d % sub.d == 0 && (sup.d / sub.d) % 2 == 1;
    if (!rule) certs.push_back("OT-divisibility");
  }
  for (const auto& [cp, count] : h.charpoly_counts) {
    auto it = g.charpoly_counts.find(cp);
    if (it == g.charpoly_counts.end() || it->second < count) {
      certs.push_back("charpoly-multiset");
      break;
    }
  }
  return certs;
}

} // namespace

std::vector<SubgroupCheck> verify_table2() {
  std::set<std::pair<FamilySpec, FamilySpec>> positives(table2_positives().begin(),
                                                        table2_positives().end());
  std::vector<SubgroupCheck> out;
  for (const FamilySpec& sub : table1_specs()) {
    for (const FamilySpec& sup : table1_specs()) {
      if (sub == sup) continue;
      SubgroupCheck check;
      check.sub = sub;
      check.sup = sup;
      check.expected_contained = positives.count({sub, sup}) > 0;
      bool contained = is_subgroup_of(build(sub), build(sup));
      if (contained) {
        check.verdict = PairVerdict::ContainedVerified;
      } else {
        check.certificates = non_containment_certificates(sub, sup);
        check.verdict = check.certificates.empty() ? PairVerdict::Undetermined
                                                   : PairVerdict::AbsentCertified;
      }
      check.matches_table = check.expected_contained == contained;
      out.push_back(std::move(check));
    }
  }
  return out;
}

std::vector<LemmaCheck> verify_lemmas(const FamilySpec& spec, std::uint64_t seed) {
  validate_spec(spec);
  std::vector<LemmaCheck> checks;
  auto add = [&](const std::string& name, bool pass, std::string detail = "") {
    checks.push_back({name, pass, std::move(detail)});
  };

  FiniteMatrixGroup g = build(spec);
  FiniteMatrixGroup z = centre(g);
  add("centre-order", z.order() == spec.d,
      "|Z(G)| = " + std::to_string(z.order()) + ", d = " + std::to_string(spec.d));

  // determinant set
  {
    unsigned m = spec.kind == OT ? spec.d : spec.d / 2;
    std::set<std::string> expect;
    for (unsigned k = 0; k < m; ++k)
      expect.insert(root_of_unity(m, static_cast<long>(k)).bytes());
    std::set<std::string> got;
    for (const CycNumber& x : det_set(spec)) got.insert(x.bytes());
    add("determinant-set", got == expect,
        "mu_" + std::to_string(m) + ", " + std::to_string(got.size()) + " values");
  }

  FiniteMatrixGroup eg = build_EG(spec);
  add("EG-order", eg.order() == 2 * g.order(), "|E(G)| = " + std::to_string(eg.order()));

  FiniteMatrixGroup dd = build_Dd(spec);
  {
    // dihedral relations: r^d = s^2 = (s r)^2 = 1
    CycMatrix r = vee(CycMatrix::scalar(2, root_of_unity(spec.d, 1)));
    const CycMatrix& s = s_matrix();
    CycMatrix rk = CycMatrix::identity(4);
    for (unsigned i = 0; i < spec.d; ++i) rk = rk * r;
    bool relations = rk.is_identity() && (s * s).is_identity() &&
                     ((s * r) * (s * r)).is_identity();
    add("Dd-dihedral", dd.order() == 2ull * spec.d && relations,
        "|D_d| = " + std::to_string(dd.order()));
  }
  add("Dd-normal-in-EG", is_normal(dd, eg));

  FiniteMatrixGroup gv = vee_group(g);
  add("Gvee-normal-in-EG", is_normal(gv, eg));
  FiniteMatrixGroup g0 = build(largest_reflection_subgroup(spec).g0);
  add("G0-normal-in-G", is_normal(g0, g));
  add("G-over-G0-index",
      g.order() == g0.order() * largest_reflection_subgroup(spec).dprime);
  FiniteMatrixGroup g0v = vee_group(g0);
  add("G0vee-normal-in-EG", is_normal(g0v, eg));

  try {
    ReflectionInventory inv = inventory(spec);
    add("reflection-inventory",
        inv.symplectic_reflections.size() == inv.n_reflections + spec.d,
        "|S(E(G))| = " + std::to_string(inv.symplectic_reflections.size()) +
            " = N + d = " + std::to_string(inv.n_reflections + spec.d));
    unsigned expected_classes = spec.kind == OT ? 1 : 2;
    add("Dd-part-classes", inv.dd_classes.size() == expected_classes,
        std::to_string(inv.dd_classes.size()) + " classes");
  } catch (const lemma_violation_error& e) {
    add("reflection-inventory", false, e.what());
  }

  // symplectic form preserved by the generators of E(G)
  {
    bool ok = true;
    for (const CycMatrix& m : eg.generators())
      if (!preserves_form(m, symplectic_form_4())) ok = false;
    add("EG-symplectic", ok);
  }

  // s g^vee s^-1 = ((det g)^-1 g)^vee on 100 seeded random elements
  {
    std::mt19937_64 rng(seed);
    const CycMatrix& s = s_matrix();
    CycMatrix sinv = s.inverse();
    bool ok = true;
    for (int trial = 0; trial < 100 && ok; ++trial) {
      CycMatrix m = g.element(rng() % g.order());
      CycMatrix lhs = s * vee(m) * sinv;
      CycMatrix rhs = vee(m.det().inv() * m);
      if (!(lhs == rhs)) ok = false;
    }
    add("vee-conjugation", ok);
  }
  return checks;
}

} // namespace srg
