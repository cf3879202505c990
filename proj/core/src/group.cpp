#include "srg/group.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <unordered_map>

namespace srg {

namespace {
ValuePool& P() { return ValuePool::global(); }
} // namespace

bool Subspace::contains(const CycVector& v) const {
  if (static_cast<int>(v.size()) != ambient) throw shape_error("vector length mismatch");
  std::vector<CycVector> rows = basis;
  rows.push_back(v);
  return rank_of(std::move(rows)) == dim();
}

std::vector<CycVector> Subspace::rref_basis() const {
  std::vector<CycVector> rows = basis;
  rref(rows);
  return rows;
}

Subspace make_subspace(int ambient, std::vector<CycVector> basis) {
  for (const auto& v : basis)
    if (static_cast<int>(v.size()) != ambient)
      throw shape_error("basis vector length mismatch");
  if (rank_of(basis) != static_cast<int>(basis.size()))
    throw group_error("basis vectors are linearly dependent");
  return Subspace{ambient, std::move(basis)};
}

FiniteMatrixGroup::FiniteMatrixGroup(std::vector<CycMatrix> generators) {
  if (generators.empty()) throw group_error("no generators and no dimension");
  dim_ = generators[0].dim();
  for (const auto& g : generators) {
    if (g.dim() != dim_) throw shape_error("generator dimension mismatch");
    gens_.push_back(emat_from(P(), g));
  }
}

FiniteMatrixGroup FiniteMatrixGroup::trivial(int dim) {
  FiniteMatrixGroup g;
  g.dim_ = dim;
  auto set = std::make_shared<ElementSet>(dim);
  set->insert(emat_identity(P(), dim).e);
  g.elements_ = std::move(set);
  return g;
}

FiniteMatrixGroup FiniteMatrixGroup::from_parts(std::vector<EMat> gens,
                                                std::shared_ptr<const ElementSet> set) {
  FiniteMatrixGroup g;
  g.dim_ = set ? set->dim() : (gens.empty() ? 0 : gens[0].dim);
  g.gens_ = std::move(gens);
  g.elements_ = std::move(set);
  return g;
}

std::vector<CycMatrix> FiniteMatrixGroup::generators() const {
  std::vector<CycMatrix> out;
  out.reserve(gens_.size());
  for (const auto& g : gens_) out.push_back(emat_to(P(), g));
  return out;
}

std::size_t FiniteMatrixGroup::order() const {
  if (!elements_) throw group_error("group is not enumerated");
  return elements_->size();
}

const ElementSet& FiniteMatrixGroup::eset() const {
  if (!elements_) throw group_error("group is not enumerated");
  return *elements_;
}

CycMatrix FiniteMatrixGroup::element(std::size_t i) const {
  return emat_to(P(), eset().mat(i));
}

bool FiniteMatrixGroup::contains(const CycMatrix& m) const {
  return contains(emat_from(P(), m));
}

bool FiniteMatrixGroup::contains(const EMat& m) const {
  if (m.dim != dim_) return false;
  return eset().contains(m.e);
}

std::shared_ptr<ElementSet> dimino_closure(ValuePool& p, int dim,
                                           const std::vector<EMat>& gens,
                                           std::size_t cap) {
  auto set = std::make_shared<ElementSet>(dim);
  EMat id = emat_identity(p, dim);
  set->insert(id.e);
  std::vector<EMat> gs;
  for (const auto& g : gens)
    if (!(g == id)) gs.push_back(g);
  if (gs.empty()) return set;

  auto check_cap = [&]() {
    if (set->size() > cap)
      throw closure_overflow_error("closure exceeded cap of " + std::to_string(cap));
  };

  for (const auto& g : gs)
    if (emat_rank(p, g) != dim)
      throw group_error("generator is not invertible");

  // cyclic group of the first generator
  for (EMat g = gs[0]; !(g == id); g = emat_mul(p, g, gs[0])) {
    set->insert(g.e);
    check_cap();
  }

  for (std::size_t i = 1; i < gs.size(); ++i) {
    if (set->contains(gs[i].e)) continue;
    std::size_t sub_size = set->size(); // |<g_0..g_{i-1}>|
    std::vector<EMat> reps{id};
    for (std::size_t j = 0; j < reps.size(); ++j) {
      for (std::size_t n = 0; n <= i; ++n) {
        EMat sg = emat_mul(p, gs[n], reps[j]);
        if (set->contains(sg.e)) continue;
        // append the whole coset sg * <g_0..g_{i-1}>
        set->insert(sg.e);
        for (std::size_t k = 1; k < sub_size; ++k) {
          EMat el = emat_mul(p, sg, set->mat(k));
          set->insert(el.e);
        }
        check_cap();
        reps.push_back(std::move(sg));
      }
    }
  }
  return set;
}

FiniteMatrixGroup enumerate(const FiniteMatrixGroup& g, std::size_t cap) {
  if (g.enumerated()) return g;
  auto set = dimino_closure(P(), g.dim(), g.egens(), cap);
  return FiniteMatrixGroup::from_parts(g.egens(), std::move(set));
}

void verify_group_closure(const FiniteMatrixGroup& g) {
  const ElementSet& set = g.eset();
  EMat id = emat_identity(P(), g.dim());
  if (!set.contains(id.e)) throw group_error("closure check: identity missing");
  for (const auto& gen : g.egens())
    if (!set.contains(gen.e)) throw group_error("closure check: generator missing");
  for (std::size_t i = 0; i < set.size(); ++i) {
    EMat el = set.mat(i);
    for (const auto& gen : g.egens()) {
      EMat prod = emat_mul(P(), gen, el);
      if (!set.contains(prod.e))
        throw group_error("closure check: set not closed under generators");
    }
  }
}

FiniteMatrixGroup centre(const FiniteMatrixGroup& g) {
  const ElementSet& set = g.eset();
  auto central = std::make_shared<ElementSet>(g.dim());
  std::vector<EMat> cgens;
  for (std::size_t i = 0; i < set.size(); ++i) {
    EMat el = set.mat(i);
    bool commutes = true;
    for (const auto& gen : g.egens()) {
      if (!emat_commutes(P(), el, gen)) {
        commutes = false;
        break;
      }
    }
    if (commutes) {
      central->insert(el.e);
      cgens.push_back(std::move(el));
    }
  }
  return FiniteMatrixGroup::from_parts(std::move(cgens), std::move(central));
}

bool is_normal(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& g) {
  const ElementSet& sset = sub.eset();
  const ElementSet& gset = g.eset();
  if (sub.dim() != g.dim()) throw containment_error("dimension mismatch");
  for (std::size_t i = 0; i < sset.size(); ++i)
    if (!gset.contains(sset.at(i)))
      throw containment_error("subgroup elements not contained in group");
  for (const auto& gen : g.egens()) {
    EMat geninv = emat_inverse(P(), gen);
    for (std::size_t i = 0; i < sset.size(); ++i) {
      EMat conj = emat_mul(P(), emat_mul(P(), gen, sset.mat(i)), geninv);
      if (!sset.contains(conj.e)) return false;
    }
  }
  return true;
}

std::vector<ConjClass> conjugacy_classes(const FiniteMatrixGroup& g,
                                         const std::vector<CycMatrix>& subset) {
  const ElementSet& gset = g.eset();
  ElementSet pending(g.dim());
  std::vector<EMat> items;
  for (const auto& m : subset) {
    EMat em = emat_from(P(), m);
    if (!gset.contains(em.e)) throw partition_error("subset not contained in group");
    if (pending.insert(em.e)) items.push_back(std::move(em));
  }
  std::vector<EMat> geninvs;
  for (const auto& gen : g.egens()) geninvs.push_back(emat_inverse(P(), gen));

  ElementSet seen(g.dim());
  std::vector<std::pair<std::string, std::vector<EMat>>> classes;
  for (const auto& start : items) {
    if (seen.contains(start.e)) continue;
    // BFS of the conjugation orbit by generators
    std::vector<EMat> members{start};
    seen.insert(start.e);
    ElementSet in_orbit(g.dim());
    in_orbit.insert(start.e);
    for (std::size_t j = 0; j < members.size(); ++j) {
      for (std::size_t k = 0; k < g.egens().size(); ++k) {
        EMat conj = emat_mul(P(), emat_mul(P(), g.egens()[k], members[j]), geninvs[k]);
        if (in_orbit.insert(conj.e)) {
          if (!pending.contains(conj.e))
            throw partition_error("subset is not closed under conjugation");
          seen.insert(conj.e);
          members.push_back(std::move(conj));
        }
      }
    }
    std::sort(members.begin(), members.end(), [&](const EMat& a, const EMat& b) {
      return emat_bytes(P(), a) < emat_bytes(P(), b);
    });
    classes.emplace_back(emat_bytes(P(), members[0]), std::move(members));
  }
  std::sort(classes.begin(), classes.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<ConjClass> out;
  for (auto& [key, members] : classes) {
    ConjClass c;
    c.rep = emat_to(P(), members[0]);
    for (const auto& m : members) c.members.push_back(emat_to(P(), m));
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct VecSet {
  std::size_t stride;
  std::vector<Vid> arena;
  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;

  explicit VecSet(std::size_t s) : stride(s) {}

  std::uint64_t hash(std::span<const Vid> v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (Vid x : v) {
      h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  // returns index of v, inserting if new; `added` reports whether inserted
  std::uint32_t find_or_insert(std::span<const Vid> v, bool& added) {
    std::uint64_t h = hash(v);
    auto& bucket = index[h];
    for (std::uint32_t idx : bucket) {
      if (std::equal(v.begin(), v.end(), arena.begin() + idx * stride)) {
        added = false;
        return idx;
      }
    }
    std::uint32_t idx = static_cast<std::uint32_t>(arena.size() / stride);
    arena.insert(arena.end(), v.begin(), v.end());
    bucket.push_back(idx);
    added = true;
    return idx;
  }

  std::span<const Vid> at(std::size_t i) const {
    return {arena.data() + i * stride, stride};
  }
  std::size_t size() const { return arena.size() / stride; }
};

} // namespace

OrbitStabilizer orbit_stabilizer(const FiniteMatrixGroup& g, const CycVector& v,
                                 std::size_t cap) {
  if (static_cast<int>(v.size()) != g.dim()) throw shape_error("vector length mismatch");
  std::vector<Vid> v0;
  for (const auto& x : v) v0.push_back(P().intern(x));

  VecSet orbit(v0.size());
  bool added = false;
  orbit.find_or_insert(v0, added);
  std::vector<EMat> transversal{emat_identity(P(), g.dim())};

  ElementSet schreier_set(g.dim());
  std::vector<EMat> schreier;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (const auto& gen : g.egens()) {
      std::vector<Vid> img = emat_apply(P(), gen, orbit.at(i));
      std::uint32_t j = orbit.find_or_insert(img, added);
      if (added) {
        transversal.push_back(emat_mul(P(), gen, transversal[i]));
        if (transversal.size() > cap)
          throw closure_overflow_error("orbit exceeded cap");
      } else {
        EMat s = emat_mul(P(), emat_inverse(P(), transversal[j]),
                          emat_mul(P(), gen, transversal[i]));
        if (schreier_set.insert(s.e)) schreier.push_back(std::move(s));
      }
    }
  }

  OrbitStabilizer result;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    CycVector w;
    for (Vid id : orbit.at(i)) w.push_back(P().value(id));
    result.orbit.push_back(std::move(w));
  }
  auto stab_set = dimino_closure(P(), g.dim(), schreier, cap);
  result.stabilizer = FiniteMatrixGroup::from_parts(std::move(schreier), std::move(stab_set));
  if (g.enumerated() &&
      result.orbit.size() * result.stabilizer.order() != g.order())
    throw group_error("orbit-stabilizer mismatch (internal)");
  return result;
}

FiniteMatrixGroup stabilizer_by_filter(const FiniteMatrixGroup& g, const CycVector& v) {
  std::vector<Vid> v0;
  for (const auto& x : v) v0.push_back(P().intern(x));
  const ElementSet& set = g.eset();
  auto stab = std::make_shared<ElementSet>(g.dim());
  std::vector<EMat> sgens;
  for (std::size_t i = 0; i < set.size(); ++i) {
    EMat el = set.mat(i);
    if (emat_apply(P(), el, v0) == v0) {
      stab->insert(el.e);
      sgens.push_back(std::move(el));
    }
  }
  return FiniteMatrixGroup::from_parts(std::move(sgens), std::move(stab));
}

CycMatrix averaging_projector(const FiniteMatrixGroup& g) {
  const ElementSet& set = g.eset();
  CycMatrix sum = CycMatrix::zero(g.dim());
  for (std::size_t i = 0; i < set.size(); ++i) sum = sum + emat_to(P(), set.mat(i));
  CycNumber scale = CycNumber(Rational(1)) / CycNumber(Rational(static_cast<long>(set.size())));
  return scale * sum;
}

Subspace fixed_space(const FiniteMatrixGroup& g) {
  CycMatrix p = averaging_projector(g);
  // column space of P = row space of P^T, canonical RREF basis
  CycMatrix pt = p.transpose();
  std::vector<CycVector> rows(g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) rows[i].push_back(pt.at(i, j));
  std::vector<int> pivots = rref(rows);
  std::vector<CycVector> basis(rows.begin(), rows.begin() + pivots.size());
  return Subspace{g.dim(), std::move(basis)};
}

Subspace invariant_complement(const FiniteMatrixGroup& g, const Subspace& fixed) {
  CycMatrix p = averaging_projector(g);
  Subspace image = fixed_space(g);
  if (image.rref_basis() != fixed.rref_basis())
    throw group_error("given fixed space is not the projector image");
  std::vector<CycVector> rows(g.dim());
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) rows[i].push_back(p.at(i, j));
  std::vector<CycVector> kernel = null_space(std::move(rows));
  if (static_cast<int>(kernel.size()) + fixed.dim() != g.dim())
    throw group_error("rank-nullity violation (internal)");
  return Subspace{g.dim(), std::move(kernel)};
}

namespace {

// coordinates of g's action on span(B): solves B * M = g * B columnwise
CycMatrix restrict_matrix(const CycMatrix& m, const std::vector<CycVector>& cols) {
  int ambient = static_cast<int>(cols[0].size());
  int k = static_cast<int>(cols.size());
  std::vector<CycVector> bmat(ambient, CycVector(k, CycNumber(0)));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < ambient; ++i) bmat[i][j] = cols[j][i];
  CycMatrix out(k);
  for (int j = 0; j < k; ++j) {
    CycVector img = m.apply(cols[j]);
    auto sol = solve(bmat, img);
    if (!sol) throw invariance_error("subspace is not invariant under the group");
    for (int i = 0; i < k; ++i) out.at(i, j) = (*sol)[i];
  }
  return out;
}

} // namespace

FiniteMatrixGroup restrict_to(const FiniteMatrixGroup& g, const Subspace& sub) {
  if (sub.ambient != g.dim()) throw shape_error("ambient dimension mismatch");
  if (rank_of(sub.basis) != sub.dim())
    throw group_error("subspace basis is degenerate");
  std::vector<EMat> rgens;
  for (const auto& gen : g.egens())
    rgens.push_back(emat_from(P(), restrict_matrix(emat_to(P(), gen), sub.basis)));
  auto set = std::make_shared<ElementSet>(sub.dim());
  if (g.enumerated()) {
    const ElementSet& es = g.eset();
    for (std::size_t i = 0; i < es.size(); ++i) {
      CycMatrix r = restrict_matrix(emat_to(P(), es.mat(i)), sub.basis);
      set->insert(emat_from(P(), r).e);
    }
    return FiniteMatrixGroup::from_parts(std::move(rgens), std::move(set));
  }
  return FiniteMatrixGroup::from_parts(std::move(rgens), nullptr);
}

FiniteMatrixGroup conjugate_group(const CycMatrix& x, const FiniteMatrixGroup& g) {
  EMat ex = emat_from(P(), x);
  EMat exinv = emat_inverse(P(), ex);
  std::vector<EMat> gens;
  for (const auto& gen : g.egens())
    gens.push_back(emat_mul(P(), emat_mul(P(), ex, gen), exinv));
  std::shared_ptr<ElementSet> set;
  if (g.enumerated()) {
    set = std::make_shared<ElementSet>(g.dim());
    const ElementSet& es = g.eset();
    for (std::size_t i = 0; i < es.size(); ++i) {
      EMat el = emat_mul(P(), emat_mul(P(), ex, es.mat(i)), exinv);
      set->insert(el.e);
    }
  }
  return FiniteMatrixGroup::from_parts(std::move(gens), std::move(set));
}

bool is_subgroup_of(const FiniteMatrixGroup& sub, const FiniteMatrixGroup& g) {
  if (sub.dim() != g.dim()) return false;
  const ElementSet& gset = g.eset();
  if (sub.enumerated()) {
    const ElementSet& sset = sub.eset();
    if (sset.size() > gset.size()) return false;
    for (std::size_t i = 0; i < sset.size(); ++i)
      if (!gset.contains(sset.at(i))) return false;
    return true;
  }
  for (const auto& gen : sub.egens())
    if (!gset.contains(gen.e)) return false;
  return true;
}

// --- element-set cache ----------------------------------------------------

namespace {
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}
bool get_u32(const std::string& s, std::size_t& pos, std::uint32_t& v) {
  if (pos + 4 > s.size()) return false;
  v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos++])) << (8 * i);
  return true;
}
bool get_u64(const std::string& s, std::size_t& pos, std::uint64_t& v) {
  if (pos + 8 > s.size()) return false;
  v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos++])) << (8 * i);
  return true;
}

bool parse_cyc(const std::string& s, std::size_t& pos, CycNumber& out) {
  std::uint32_t n = 0, terms = 0;
  if (!get_u32(s, pos, n) || !get_u32(s, pos, terms) || n == 0) return false;
  std::vector<Rational> coeffs(n, Rational(0));
  for (std::uint32_t t = 0; t < terms; ++t) {
    std::uint32_t e = 0;
    if (!get_u32(s, pos, e) || e >= n) return false;
    mpz_class parts[2];
    for (int half = 0; half < 2; ++half) {
      if (pos >= s.size()) return false;
      unsigned char sign = static_cast<unsigned char>(s[pos++]);
      std::uint32_t len = 0;
      if (!get_u32(s, pos, len) || pos + len > s.size()) return false;
      mpz_class mag(0);
      if (len > 0) mpz_import(mag.get_mpz_t(), len, -1, 1, 0, 0, s.data() + pos);
      pos += len;
      if (sign == 2) mag = -mag;
      if (sign == 0 && len != 0) return false;
      parts[half] = mag;
    }
    if (parts[1] == 0) return false;
    Rational r(parts[0], parts[1]);
    r.canonicalize();
    coeffs[e] = r;
  }
  out = CycNumber::from_powers(n, std::move(coeffs));
  return true;
}
} // namespace

bool save_elements(const FiniteMatrixGroup& g, const std::string& path) {
  if (!g.enumerated()) return false;
  const ElementSet& set = g.eset();
  std::string out = "SRGC";
  put_u32(out, 1);
  put_u32(out, static_cast<std::uint32_t>(g.dim()));
  put_u64(out, set.size());

  // value table: collect distinct ids in first-seen order
  std::unordered_map<Vid, std::uint32_t> remap;
  std::vector<Vid> table;
  std::size_t stride = static_cast<std::size_t>(g.dim()) * g.dim();
  std::vector<std::uint32_t> body;
  body.reserve(set.size() * stride);
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (Vid id : set.at(i)) {
      auto [it, added] = remap.emplace(id, static_cast<std::uint32_t>(table.size()));
      if (added) table.push_back(id);
      body.push_back(it->second);
    }
  }
  put_u32(out, static_cast<std::uint32_t>(table.size()));
  for (Vid id : table) out += ValuePool::global().key(id);
  for (std::uint32_t idx : body) put_u32(out, idx);

  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) return false;
  std::size_t written = std::fwrite(out.data(), 1, out.size(), f);
  std::fclose(f);
  return written == out.size();
}

std::optional<FiniteMatrixGroup> load_elements(const std::vector<CycMatrix>& generators,
                                               const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) return std::nullopt;
  std::string data;
  char buf[1 << 16];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof(buf), f)) > 0) data.append(buf, n);
  std::fclose(f);

  std::size_t pos = 0;
  if (data.size() < 4 || data.compare(0, 4, "SRGC") != 0) return std::nullopt;
  pos = 4;
  std::uint32_t version = 0, dim = 0, nvalues = 0;
  std::uint64_t count = 0;
  if (!get_u32(data, pos, version) || version != 1) return std::nullopt;
  if (!get_u32(data, pos, dim)) return std::nullopt;
  if (!get_u64(data, pos, count)) return std::nullopt;
  if (!get_u32(data, pos, nvalues)) return std::nullopt;
  if (generators.empty() || generators[0].dim() != static_cast<int>(dim)) return std::nullopt;

  std::vector<Vid> table;
  table.reserve(nvalues);
  for (std::uint32_t i = 0; i < nvalues; ++i) {
    CycNumber x;
    if (!parse_cyc(data, pos, x)) return std::nullopt;
    table.push_back(ValuePool::global().intern(x));
  }
  std::size_t stride = static_cast<std::size_t>(dim) * dim;
  auto set = std::make_shared<ElementSet>(static_cast<int>(dim));
  std::vector<Vid> row(stride);
  for (std::uint64_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < stride; ++j) {
      std::uint32_t idx = 0;
      if (!get_u32(data, pos, idx) || idx >= table.size()) return std::nullopt;
      row[j] = table[idx];
    }
    set->insert(row);
  }
  if (set->size() != count) return std::nullopt;

  FiniteMatrixGroup g(generators);
  // the cache must contain the generators and the identity
  for (const auto& gen : g.egens())
    if (!set->contains(gen.e)) return std::nullopt;
  if (!set->contains(emat_identity(ValuePool::global(), static_cast<int>(dim)).e))
    return std::nullopt;
  return FiniteMatrixGroup::from_parts(g.egens(), std::move(set));
}

} // namespace srg
