#include "srg/ws2.hpp"

#include <algorithm>
#include <map>

namespace srg {

namespace {
ValuePool& P() { return ValuePool::global(); }

CycMatrix from_rows(int dim, const std::vector<std::vector<CycNumber>>& rows) {
  CycMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rows[i][j];
  return m;
}
} // namespace

const std::vector<CycMatrix>& ws2_generators() {
  static const std::vector<CycMatrix> gens = [] {
    CycNumber o(0), l(1), n(-1), i = cyc_i(), ni = -cyc_i();
    CycNumber h(Rational(1, 2));
    std::vector<std::vector<CycNumber>> m1 = {
        {l, i, o, o, o, o, n, ni},
        {ni, l, o, o, o, o, ni, l},
        {o, o, l, i, l, i, o, o},
        {o, o, ni, l, i, n, o, o},
        {o, o, l, ni, l, ni, o, o},
        {o, o, ni, n, i, l, o, o},
        {n, i, o, o, o, o, l, ni},
        {i, l, o, o, o, o, i, l}};
    CycMatrix M1 = h * from_rows(8, m1);
    std::vector<std::vector<CycNumber>> m2 = {
        {o, n, o, o, o, o, o, o},
        {n, o, o, o, o, o, o, o},
        {o, o, l, o, o, o, o, o},
        {o, o, o, l, o, o, o, o},
        {o, o, o, o, o, n, o, o},
        {o, o, o, o, n, o, o, o},
        {o, o, o, o, o, o, l, o},
        {o, o, o, o, o, o, o, l}};
    std::vector<std::vector<CycNumber>> m3 = {
        {o, o, n, o, o, o, o, o},
        {o, l, o, o, o, o, o, o},
        {n, o, o, o, o, o, o, o},
        {o, o, o, l, o, o, o, o},
        {o, o, o, o, o, o, n, o},
        {o, o, o, o, o, l, o, o},
        {o, o, o, o, n, o, o, o},
        {o, o, o, o, o, o, o, l}};
    CycMatrix M4 = CycMatrix::identity(8);
    M4.at(0, 0) = n;
    M4.at(4, 4) = n;
    return std::vector<CycMatrix>{M1, from_rows(8, m2), from_rows(8, m3), M4};
  }();
  return gens;
}

const CycVector& ws2_v() {
  static const CycVector v = [] {
    CycVector x(8, CycNumber(0));
    x[2] = CycNumber(1);
    x[7] = CycNumber(-1);
    return x;
  }();
  return v;
}

const CycVector& ws2_u() {
  static const CycVector u = [] {
    CycVector x(8, CycNumber(0));
    x[3] = CycNumber(1);
    x[6] = CycNumber(1);
    return x;
  }();
  return u;
}

const std::vector<CycVector>& ws2_w_basis() {
  static const std::vector<CycVector> cols = [] {
    CycNumber z = root_of_unity(8, 1);
    CycNumber z3 = root_of_unity(8, 3);
    CycNumber o(0);
    CycNumber h(Rational(1, 2));
    // rows of the displayed 8x6 matrix (before the global 1/2)
    std::vector<std::vector<CycNumber>> rows = {
        {-z3, -z3, o, -z3, -z3, o},
        {-z, z, o, z, -z, o},
        {o, o, -z3, o, o, z3},
        {o, o, -z, o, o, -z},
        {-z, -z, o, z, z, o},
        {z3, -z3, o, z3, -z3, o},
        {o, o, z, o, o, z},
        {o, o, -z3, o, o, z3}};
    std::vector<CycVector> cols6(6, CycVector(8, CycNumber(0)));
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 6; ++j) cols6[j][i] = h * rows[i][j];
    return cols6;
  }();
  return cols;
}

const std::vector<CycMatrix>& ws2_displayed_hw_generators() {
  static const std::vector<CycMatrix> gens = [] {
    CycNumber o(0), l(1), n(-1), i = cyc_i(), ni = -cyc_i();
    std::vector<std::vector<CycNumber>> a1 = {
        {o, ni, o, o, o, o},
        {i, o, o, o, o, o},
        {o, o, l, o, o, o},
        {o, o, o, o, i, o},
        {o, o, o, ni, o, o},
        {o, o, o, o, o, l}};
    std::vector<std::vector<CycNumber>> a2 = {
        {o, n, o, o, o, o},
        {n, o, o, o, o, o},
        {o, o, l, o, o, o},
        {o, o, o, o, n, o},
        {o, o, o, n, o, o},
        {o, o, o, o, o, l}};
    std::vector<std::vector<CycNumber>> a3 = {
        {o, o, ni, o, o, o},
        {o, l, o, o, o, o},
        {i, o, o, o, o, o},
        {o, o, o, o, o, i},
        {o, o, o, o, l, o},
        {o, o, o, ni, o, o}};
    return std::vector<CycMatrix>{from_rows(6, a1), from_rows(6, a2), from_rows(6, a3)};
  }();
  return gens;
}

const CycMatrix& ws2_form_j6() {
  static const CycMatrix j = [] {
    CycMatrix m(6);
    for (int i = 0; i < 3; ++i) {
      m.at(i, 3 + i) = CycNumber(1);
      m.at(3 + i, i) = CycNumber(-1);
    }
    return m;
  }();
  return j;
}

FiniteMatrixGroup build_ws2(std::size_t cap, const std::string& cache_dir) {
  std::string path;
  if (!cache_dir.empty()) {
    path = cache_dir + "/ws2-elements.srgc";
    if (auto cached = load_elements(ws2_generators(), path)) return *cached;
  }
  FiniteMatrixGroup w = enumerate(FiniteMatrixGroup(ws2_generators()), cap);
  if (!path.empty()) save_elements(w, path);
  return w;
}

InvariantFormResult invariant_form(const std::vector<CycMatrix>& gens) {
  InvariantFormResult result;
  if (gens.empty()) return result;
  int n = gens[0].dim();
  // unknowns X_{kl}, row index (g, i, j): sum_{k,l} M_ki M_lj X_kl - X_ij = 0
  std::vector<CycVector> rows;
  for (const CycMatrix& m : gens) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CycVector row(static_cast<std::size_t>(n) * n, CycNumber(0));
        for (int k = 0; k < n; ++k) {
          if (m.at(k, i).is_zero()) continue;
          for (int l = 0; l < n; ++l) {
            if (m.at(l, j).is_zero()) continue;
            row[static_cast<std::size_t>(k) * n + l] =
                row[static_cast<std::size_t>(k) * n + l] + m.at(k, i) * m.at(l, j);
          }
        }
        row[static_cast<std::size_t>(i) * n + j] =
            row[static_cast<std::size_t>(i) * n + j] - CycNumber(1);
        rows.push_back(std::move(row));
      }
    }
  }
  std::vector<CycVector> kernel = null_space(std::move(rows));
  result.solution_dim = static_cast<int>(kernel.size());
  if (result.solution_dim != 1) return result;
  CycMatrix form(n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) form.at(k, l) = kernel[0][static_cast<std::size_t>(k) * n + l];
  result.antisymmetric = form.transpose() == -form;
  result.nondegenerate = form.rank() == n;
  for (const CycMatrix& m : gens)
    if (!(m.transpose() * form * m == form)) return result;
  result.form = std::move(form);
  return result;
}

FiniteMatrixGroup ws2_restricted_group(const FiniteMatrixGroup& w) {
  OrbitStabilizer os = orbit_stabilizer(w, ws2_v());
  Subspace complement{8, ws2_w_basis()};
  return restrict_to(os.stabilizer, complement);
}

FiniteMatrixGroup lagrangian_action(const FiniteMatrixGroup& hw) {
  const ElementSet& set = hw.eset();
  auto out = std::make_shared<ElementSet>(3);
  std::vector<EMat> gens;
  for (std::size_t i = 0; i < set.size(); ++i) {
    EMat six = set.mat(i);
    EMat three;
    three.dim = 3;
    three.e.resize(9);
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) three.e[static_cast<std::size_t>(r) * 3 + c] =
          six.e[static_cast<std::size_t>(r) * 6 + c];
    if (out->insert(three.e)) gens.push_back(three);
  }
  return FiniteMatrixGroup::from_parts(std::move(gens), std::move(out));
}

bool identify_g443(const FiniteMatrixGroup& action3) {
  if (action3.dim() != 3) return false;
  if (!action3.enumerated() || action3.order() != 96) return false;
  // generated by its rank-1-deviation elements
  std::vector<EMat> reflections;
  const ElementSet& set = action3.eset();
  for (std::size_t i = 0; i < set.size(); ++i) {
    EMat m = set.mat(i);
    if (emat_rank_minus_identity(P(), m) == 1) reflections.push_back(std::move(m));
  }
  if (reflections.empty()) return false;
  auto closure = dimino_closure(P(), 3, reflections, 2 * action3.order());
  if (closure->size() != action3.order()) return false;
  RationalFunction mol = molien_series(action3);
  auto degrees = invariant_degrees(mol);
  return degrees && *degrees == std::vector<unsigned>{3, 4, 8};
}

WS2Report stabilizer_pipeline(const FiniteMatrixGroup& w, bool full) {
  WS2Report rep;
  rep.group_order = w.order();

  OrbitStabilizer os = orbit_stabilizer(w, ws2_v());
  rep.orbit_size = os.orbit.size();
  rep.stabilizer_order = os.stabilizer.order();

  // the recorded generating word: M2, M4, M1 M3 M4 M2 M4 M3 M1
  const auto& g = ws2_generators();
  CycMatrix word = g[0] * g[2] * g[3] * g[1] * g[3] * g[2] * g[0];
  FiniteMatrixGroup word_group = enumerate(FiniteMatrixGroup({g[1], g[3], word}));
  rep.stabilizer_matches_word =
      word_group.order() == os.stabilizer.order() &&
      is_subgroup_of(word_group, os.stabilizer);

  if (full) {
    FiniteMatrixGroup filtered = stabilizer_by_filter(w, ws2_v());
    rep.two_method_stabilizer_agreement =
        filtered.order() == os.stabilizer.order() &&
        is_subgroup_of(filtered, os.stabilizer);
    rep.full_checks_run = true;
  }

  Subspace fixed = fixed_space(os.stabilizer);
  rep.fixed_dim = fixed.dim();
  rep.fixed_contains_paper_vectors = fixed.contains(ws2_v()) && fixed.contains(ws2_u());

  Subspace complement = invariant_complement(os.stabilizer, fixed);
  rep.complement_dim = complement.dim();
  Subspace wspan = make_subspace(8, ws2_w_basis());
  rep.complement_matches_w_basis = complement.rref_basis() == wspan.rref_basis();

  FiniteMatrixGroup hw = restrict_to(os.stabilizer, wspan);
  rep.displayed_generators_in_hw = true;
  for (const CycMatrix& a : ws2_displayed_hw_generators())
    if (!hw.contains(a)) rep.displayed_generators_in_hw = false;

  rep.form_preserved = true;
  rep.lagrangian_preserved = true;
  const CycMatrix& j6 = ws2_form_j6();
  const ElementSet& hset = hw.eset();
  for (std::size_t i = 0; i < hset.size(); ++i) {
    CycMatrix m = emat_to(P(), hset.mat(i));
    if (!(m.transpose() * j6 * m == j6)) rep.form_preserved = false;
    for (int r = 3; r < 6; ++r)
      for (int c = 0; c < 3; ++c)
        if (!m.at(r, c).is_zero()) rep.lagrangian_preserved = false;
  }

  FiniteMatrixGroup l3 = lagrangian_action(hw);
  RationalFunction mol = molien_series(l3);
  if (auto degrees = invariant_degrees(mol)) rep.molien_num_degrees = *degrees;
  rep.identified = identify_g443(l3);

  rep.ambient_form = invariant_form(ws2_generators());
  return rep;
}

bool WS2Report::all_pass() const {
  bool ok = group_order == 82944 && orbit_size * stabilizer_order == group_order &&
            stabilizer_order == 96 && stabilizer_matches_word && fixed_dim == 2 &&
            complement_dim == 6 && fixed_contains_paper_vectors &&
            complement_matches_w_basis && displayed_generators_in_hw &&
            form_preserved && lagrangian_preserved &&
            molien_num_degrees == std::vector<unsigned>{3, 4, 8} && identified &&
            ambient_form.solution_dim == 1 && ambient_form.antisymmetric &&
            ambient_form.nondegenerate;
  if (full_checks_run) ok = ok && two_method_stabilizer_agreement;
  return ok;
}

unsigned invariant_dim_by_rank(const FiniteMatrixGroup& g, unsigned degree) {
  int n = g.dim();
  // basis of Sym^degree: exponent vectors of total degree `degree`, lex order
  std::vector<std::vector<unsigned>> basis;
  std::vector<unsigned> cur(n, 0);
  auto rec = [&](auto&& self, int pos, unsigned left) -> void {
    if (pos == n - 1) {
      cur[pos] = left;
      basis.push_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
  };
  rec(rec, 0, degree);
  std::map<std::vector<unsigned>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;

  std::size_t dim = basis.size();
  std::vector<CycVector> acc(dim, CycVector(dim, CycNumber(0)));
  const ElementSet& set = g.eset();
  for (std::size_t e = 0; e < set.size(); ++e) {
    CycMatrix m = g.element(e);
    // column beta: expand prod_j (sum_i m_ij x_i)^{beta_j}
    for (std::size_t b = 0; b < dim; ++b) {
      std::map<std::vector<unsigned>, CycNumber> poly;
      poly[std::vector<unsigned>(n, 0)] = CycNumber(1);
      for (int j = 0; j < n; ++j) {
        for (unsigned rep = 0; rep < basis[b][j]; ++rep) {
          std::map<std::vector<unsigned>, CycNumber> next;
          for (const auto& [expv, coeff] : poly) {
            for (int i = 0; i < n; ++i) {
              if (m.at(i, j).is_zero()) continue;
              std::vector<unsigned> e2 = expv;
              e2[i] += 1;
              auto it = next.find(e2);
              CycNumber add = coeff * m.at(i, j);
              if (it == next.end()) next.emplace(std::move(e2), std::move(add));
              else it->second = it->second + add;
            }
          }
          poly = std::move(next);
        }
      }
      for (const auto& [expv, coeff] : poly) acc[index[expv]][b] = acc[index[expv]][b] + coeff;
    }
  }
  CycNumber scale = CycNumber(1) / CycNumber(Rational(static_cast<long>(set.size())));
  for (auto& row : acc)
    for (auto& x : row) x = scale * x;
  return static_cast<unsigned>(rank_of(std::move(acc)));
}

} // namespace srg
