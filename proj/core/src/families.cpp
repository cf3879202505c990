#include "srg/families.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace srg {

namespace {
ValuePool& P() { return ValuePool::global(); }

CycMatrix mat2(const CycNumber& a, const CycNumber& b, const CycNumber& c,
               const CycNumber& d) {
  CycMatrix m(2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = c;
  m.at(1, 1) = d;
  return m;
}

// quaternion a + bi + cj + dk as a 2x2 complex matrix
CycMatrix quat(const CycNumber& a, const CycNumber& b, const CycNumber& c,
               const CycNumber& d) {
  CycNumber i = cyc_i();
  return mat2(a + i * b, c + i * d, -c + i * d, a - i * b);
}

struct BaseGroups {
  FiniteMatrixGroup t, o, ico;
  CycMatrix omega;
};

const BaseGroups& bases() {
  static const BaseGroups bg = [] {
    BaseGroups b;
    CycNumber half(Rational(1, 2));
    CycMatrix qi = quat(CycNumber(0), CycNumber(1), CycNumber(0), CycNumber(0));
    CycMatrix qj = quat(CycNumber(0), CycNumber(0), CycNumber(1), CycNumber(0));
    CycMatrix h = quat(half, half, half, half); // (1+i+j+k)/2
    b.t = enumerate(FiniteMatrixGroup({qi, qj, h}));

    b.omega = mat2(root_of_unity(8, 1), CycNumber(0), CycNumber(0), root_of_unity(8, -1));
    b.o = enumerate(FiniteMatrixGroup({qi, qj, h, b.omega}));

    // golden ratio (1 + sqrt 5)/2, sqrt 5 as the quadratic Gauss sum mod 5
    CycNumber sqrt5 = root_of_unity(5, 1) - root_of_unity(5, 2) -
                      root_of_unity(5, 3) + root_of_unity(5, 4);
    CycNumber phi = (CycNumber(1) + sqrt5) * half;
    CycNumber phibar = (CycNumber(1) - sqrt5) * half; // -1/phi
    CycMatrix sigma = quat(CycNumber(0), half, -phibar * half, phi * half);
    b.ico = enumerate(FiniteMatrixGroup({qi, qj, h, sigma}));
    return b;
  }();
  return bg;
}

const char* kind_name(FamilyKindId k) {
  switch (k) {
    case FamilyKindId::MuT: return "muT";
    case FamilyKindId::MuO: return "muO";
    case FamilyKindId::MuI: return "muI";
    case FamilyKindId::OT: return "OT";
  }
  return "?";
}

} // namespace

bool spec_valid(const FamilySpec& s) {
  if (s.d == 0 || s.d > kMaxFamilyIndex) return false;
  switch (s.kind) {
    case FamilyKindId::MuT: return s.d % 6 == 0;
    case FamilyKindId::MuO: return s.d % 4 == 0;
    case FamilyKindId::MuI: return s.d % 4 == 0 || s.d % 6 == 0 || s.d % 10 == 0;
    case FamilyKindId::OT: return s.d % 2 == 0 && s.d % 8 != 0;
  }
  return false;
}

void validate_spec(const FamilySpec& s) {
  if (!spec_valid(s))
    throw family_constraint_error("invalid family index " + spec_str(s));
}

std::string spec_str(const FamilySpec& s) {
  return std::string(kind_name(s.kind)) + ":" + std::to_string(s.d);
}

std::string derived_str(const DerivedSpec& s) {
  std::string base = spec_str(s.base);
  switch (s.object) {
    case DerivedObject::G: return base;
    case DerivedObject::G0: return base + ":G0";
    case DerivedObject::EG: return base + ":EG";
    case DerivedObject::Dd: return base + ":Dd";
    case DerivedObject::Z: return base + ":Z";
  }
  return base;
}

FamilySpec parse_spec(const std::string& text) {
  std::size_t colon = text.find(':');
  if (colon == std::string::npos)
    throw spec_parse_error("expected '<kind>:<d>', got '" + text + "'");
  std::string kind = text.substr(0, colon);
  FamilySpec s;
  if (kind == "muT") s.kind = FamilyKindId::MuT;
  else if (kind == "muO") s.kind = FamilyKindId::MuO;
  else if (kind == "muI") s.kind = FamilyKindId::MuI;
  else if (kind == "OT") s.kind = FamilyKindId::OT;
  else throw spec_parse_error("unknown family kind '" + kind + "'");
  try {
    std::size_t used = 0;
    std::string num = text.substr(colon + 1);
    long d = std::stol(num, &used);
    if (used != num.size() || d <= 0) throw spec_parse_error("bad index");
    s.d = static_cast<unsigned>(d);
  } catch (const spec_parse_error&) {
    throw;
  } catch (...) {
    throw spec_parse_error("bad family index in '" + text + "'");
  }
  if (!spec_valid(s)) throw spec_parse_error("invalid family spec '" + text + "'");
  return s;
}

DerivedSpec parse_derived_spec(const std::string& text) {
  DerivedSpec d;
  std::size_t first = text.find(':');
  if (first == std::string::npos)
    throw spec_parse_error("expected '<kind>:<d>[:<object>]', got '" + text + "'");
  std::size_t second = text.find(':', first + 1);
  if (second == std::string::npos) {
    d.base = parse_spec(text);
    d.object = DerivedObject::G;
    return d;
  }
  d.base = parse_spec(text.substr(0, second));
  std::string obj = text.substr(second + 1);
  if (obj == "EG") d.object = DerivedObject::EG;
  else if (obj == "Dd") d.object = DerivedObject::Dd;
  else if (obj == "G0") d.object = DerivedObject::G0;
  else if (obj == "Z") d.object = DerivedObject::Z;
  else throw spec_parse_error("unknown derived object '" + obj + "'");
  return d;
}

const FiniteMatrixGroup& binary_tetrahedral() { return bases().t; }
const FiniteMatrixGroup& binary_octahedral() { return bases().o; }
const FiniteMatrixGroup& binary_icosahedral() { return bases().ico; }
const CycMatrix& omega_coset_rep() { return bases().omega; }

FiniteMatrixGroup mu_group(unsigned d, int dim) {
  if (d == 0) throw family_constraint_error("mu_0 is empty");
  auto set = std::make_shared<ElementSet>(dim);
  std::vector<EMat> gens;
  for (unsigned k = 0; k < d; ++k) {
    Vid z = P().intern(root_of_unity(d, static_cast<long>(k)));
    EMat m = emat_scale(P(), z, emat_identity(P(), dim));
    set->insert(m.e);
    if (k == 1 || d == 1) gens.push_back(std::move(m));
  }
  return FiniteMatrixGroup::from_parts(std::move(gens), std::move(set));
}

std::size_t family_order(const FamilySpec& s) {
  switch (s.kind) {
    case FamilyKindId::MuT: return 12ull * s.d;
    case FamilyKindId::MuO: return 24ull * s.d;
    case FamilyKindId::MuI: return 60ull * s.d;
    case FamilyKindId::OT: return 24ull * s.d;
  }
  return 0;
}

namespace {

const FiniteMatrixGroup& base_of(FamilyKindId kind) {
  switch (kind) {
    case FamilyKindId::MuT: return binary_tetrahedral();
    case FamilyKindId::MuO: return binary_octahedral();
    case FamilyKindId::MuI: return binary_icosahedral();
    case FamilyKindId::OT: return binary_tetrahedral(); // even cosets; odd use omega
  }
  return binary_tetrahedral();
}

FiniteMatrixGroup assemble(const FamilySpec& s) {
  const FiniteMatrixGroup& base = base_of(s.kind);
  const ElementSet& bset = base.eset();
  auto set = std::make_shared<ElementSet>(2);
  std::vector<EMat> gens = base.egens();

  if (s.kind == FamilyKindId::OT) {
    unsigned dd = 2 * s.d;
    EMat omega = emat_from(P(), omega_coset_rep());
    for (unsigned k = 0; k < dd; ++k) {
      Vid z = P().intern(root_of_unity(dd, static_cast<long>(k)));
      for (std::size_t i = 0; i < bset.size(); ++i) {
        EMat el = bset.mat(i);
        if (k % 2 == 1) el = emat_mul(P(), omega, el);
        set->insert(emat_scale(P(), z, el).e);
      }
    }
    Vid z1 = P().intern(root_of_unity(dd, 1));
    gens.push_back(emat_scale(P(), z1, omega));
  } else {
    for (unsigned k = 0; k < s.d; ++k) {
      Vid z = P().intern(root_of_unity(s.d, static_cast<long>(k)));
      for (std::size_t i = 0; i < bset.size(); ++i)
        set->insert(emat_scale(P(), z, bset.mat(i)).e);
    }
    Vid z1 = P().intern(root_of_unity(s.d, 1));
    gens.push_back(emat_scale(P(), z1, emat_identity(P(), 2)));
  }
  return FiniteMatrixGroup::from_parts(std::move(gens), std::move(set));
}

std::map<std::pair<int, unsigned>, FiniteMatrixGroup>& build_cache() {
  static std::map<std::pair<int, unsigned>, FiniteMatrixGroup> cache;
  return cache;
}

} // namespace

FiniteMatrixGroup build(const FamilySpec& s) {
  validate_spec(s);
  auto key = std::make_pair(static_cast<int>(s.kind), s.d);
  auto& cache = build_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  FiniteMatrixGroup g = assemble(s);
  if (g.order() != family_order(s))
    throw group_error("assembled order " + std::to_string(g.order()) +
                      " does not match " + std::to_string(family_order(s)) +
                      " for " + spec_str(s));
  verify_group_closure(g);
  cache.emplace(key, g);
  return g;
}

std::vector<CycNumber> det_set(const FamilySpec& s) {
  FiniteMatrixGroup g = build(s);
  const ElementSet& set = g.eset();
  ElementSet dets(1);
  std::vector<CycNumber> out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    auto m = set.at(i);
    Vid det = P().sub(P().mul(m[0], m[3]), P().mul(m[1], m[2]));
    Vid arr[1] = {det};
    if (dets.insert(arr)) out.push_back(P().value(det));
  }
  std::sort(out.begin(), out.end(),
            [](const CycNumber& a, const CycNumber& b) { return a.bytes() < b.bytes(); });
  return out;
}

ReflSubgroup largest_reflection_subgroup(const FamilySpec& s) {
  validate_spec(s);
  ReflSubgroup r;
  auto largest_divisor_in = [&](std::initializer_list<unsigned> cands) {
    unsigned best = 0;
    for (unsigned c : cands)
      if (s.d % c == 0 && c > best) best = c;
    return best;
  };
  switch (s.kind) {
    case FamilyKindId::MuT:
      r.d0 = largest_divisor_in({6, 12});
      break;
    case FamilyKindId::MuO:
      r.d0 = largest_divisor_in({4, 8, 12, 24});
      break;
    case FamilyKindId::MuI:
      r.d0 = largest_divisor_in({4, 6, 10, 12, 20, 30, 60});
      break;
    case FamilyKindId::OT: {
      unsigned m = s.d / 2;
      unsigned m0 = 0;
      for (unsigned c : {1u, 2u, 3u, 6u})
        if (m % c == 0 && (m / c) % 2 == 1 && c > m0) m0 = c;
      r.d0 = 2 * m0;
      break;
    }
  }
  if (r.d0 == 0)
    throw family_constraint_error("no reflection subgroup index for " + spec_str(s));
  r.g0 = FamilySpec{s.kind, r.d0};
  r.dprime = s.d / r.d0;
  return r;
}

CycMatrix vee(const CycMatrix& g) {
  int n = g.dim();
  CycMatrix m(2 * n);
  CycMatrix ti = g.transpose().inverse();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.at(i, j) = g.at(i, j);
      m.at(n + i, n + j) = ti.at(i, j);
    }
  return m;
}

EMat evee(ValuePool& p, const EMat& g) {
  int n = g.dim;
  EMat ti = emat_inverse(p, emat_transpose(g));
  EMat m;
  m.dim = 2 * n;
  m.e.assign(static_cast<std::size_t>(2 * n) * (2 * n), p.zero());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m.e[static_cast<std::size_t>(i) * 2 * n + j] = g.e[static_cast<std::size_t>(i) * n + j];
      m.e[static_cast<std::size_t>(n + i) * 2 * n + (n + j)] =
          ti.e[static_cast<std::size_t>(i) * n + j];
    }
  return m;
}

const CycMatrix& s_matrix() {
  static const CycMatrix s = [] {
    CycMatrix m(4);
    m.at(0, 3) = CycNumber(1);
    m.at(1, 2) = CycNumber(-1);
    m.at(2, 1) = CycNumber(-1);
    m.at(3, 0) = CycNumber(1);
    return m;
  }();
  return s;
}

const CycMatrix& symplectic_form_4() {
  static const CycMatrix omega = [] {
    CycMatrix m(4);
    m.at(0, 2) = CycNumber(1);
    m.at(1, 3) = CycNumber(1);
    m.at(2, 0) = CycNumber(-1);
    m.at(3, 1) = CycNumber(-1);
    return m;
  }();
  return omega;
}

bool preserves_form(const CycMatrix& m, const CycMatrix& form) {
  return m.transpose() * form * m == form;
}

FiniteMatrixGroup vee_group(const FiniteMatrixGroup& g) {
  std::vector<EMat> gens;
  for (const auto& gen : g.egens()) gens.push_back(evee(P(), gen));
  std::shared_ptr<ElementSet> set;
  if (g.enumerated()) {
    set = std::make_shared<ElementSet>(2 * g.dim());
    const ElementSet& es = g.eset();
    for (std::size_t i = 0; i < es.size(); ++i)
      set->insert(evee(P(), es.mat(i)).e);
  }
  return FiniteMatrixGroup::from_parts(std::move(gens), std::move(set));
}

FiniteMatrixGroup build_EG(const FamilySpec& s) {
  auto key = std::make_pair(1000 + static_cast<int>(s.kind), s.d);
  auto& cache = build_cache();
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  FiniteMatrixGroup g = build(s);
  EMat smat = emat_from(P(), s_matrix());
  auto set = std::make_shared<ElementSet>(4);
  const ElementSet& es = g.eset();
  for (std::size_t i = 0; i < es.size(); ++i) {
    EMat gv = evee(P(), es.mat(i));
    set->insert(gv.e);
    set->insert(emat_mul(P(), gv, smat).e);
  }
  std::vector<EMat> gens;
  for (const auto& gen : g.egens()) gens.push_back(evee(P(), gen));
  gens.push_back(smat);
  FiniteMatrixGroup eg = FiniteMatrixGroup::from_parts(std::move(gens), std::move(set));
  if (eg.order() != 2 * g.order())
    throw group_error("|E(G)| != 2|G| for " + spec_str(s));
  verify_group_closure(eg);
  cache.emplace(key, eg);
  return eg;
}

FiniteMatrixGroup build_Dd(const FamilySpec& s) {
  validate_spec(s);
  CycMatrix r = CycMatrix::scalar(2, root_of_unity(s.d, 1));
  FiniteMatrixGroup dd = enumerate(FiniteMatrixGroup({vee(r), s_matrix()}));
  if (dd.order() != 2ull * s.d)
    throw group_error("|D_d| != 2d for " + spec_str(s));
  return dd;
}

FiniteMatrixGroup build_derived(const DerivedSpec& s) {
  switch (s.object) {
    case DerivedObject::G: return build(s.base);
    case DerivedObject::G0: return build(largest_reflection_subgroup(s.base).g0);
    case DerivedObject::EG: return build_EG(s.base);
    case DerivedObject::Dd: return build_Dd(s.base);
    case DerivedObject::Z: return centre(build(s.base));
  }
  throw family_constraint_error("unknown derived object");
}

std::vector<unsigned> valid_indices(FamilyKindId kind) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d <= kMaxFamilyIndex; ++d)
    if (spec_valid(FamilySpec{kind, d})) out.push_back(d);
  return out;
}

} // namespace srg
