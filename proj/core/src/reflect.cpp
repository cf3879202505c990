#include "srg/reflect.hpp"

#include <algorithm>

namespace srg {

namespace {
ValuePool& P() { return ValuePool::global(); }

std::vector<std::size_t> scan_rank(const FiniteMatrixGroup& g, int target) {
  std::vector<std::size_t> hits;
  const ElementSet& set = g.eset();
  for (std::size_t i = 0; i < set.size(); ++i)
    if (emat_rank_minus_identity(P(), set.mat(i)) == target) hits.push_back(i);
  return hits;
}
} // namespace

bool is_complex_reflection(const CycMatrix& g) {
  if (g.dim() != 2) throw shape_error("complex reflection test needs a 2x2 matrix");
  return (g - CycMatrix::identity(2)).rank() == 1;
}

bool is_symplectic_reflection(const CycMatrix& t) {
  if (t.dim() != 4) throw shape_error("symplectic reflection test needs a 4x4 matrix");
  return (t - CycMatrix::identity(4)).rank() == 2;
}

std::vector<CycMatrix> complex_reflections(const FiniteMatrixGroup& g) {
  std::vector<CycMatrix> out;
  for (std::size_t i : scan_rank(g, 1)) out.push_back(g.element(i));
  return out;
}

unsigned reflection_count(const FamilySpec& spec0) {
  return static_cast<unsigned>(scan_rank(build(spec0), 1).size());
}

ReflectionInventory inventory(const FamilySpec& spec) {
  validate_spec(spec);
  ReflectionInventory inv;
  inv.group = DerivedSpec{spec, DerivedObject::EG};

  FiniteMatrixGroup g = build(spec);
  FiniteMatrixGroup g0 = build(largest_reflection_subgroup(spec).g0);
  FiniteMatrixGroup eg = build_EG(spec);
  unsigned d = spec.d;

  // reflections of G and of G_0; Corollary: they agree
  std::vector<std::size_t> rg = scan_rank(g, 1);
  std::vector<std::size_t> rg0 = scan_rank(g0, 1);
  inv.n_reflections = static_cast<unsigned>(rg0.size());
  if (rg.size() != rg0.size())
    throw lemma_violation_error("R(G) != R(G_0) for " + spec_str(spec),
                                rg.empty() ? "" : emat_bytes(P(), g.eset().mat(rg[0])));
  for (std::size_t i : rg) {
    EMat m = g.eset().mat(i);
    if (!g0.contains(m))
      throw lemma_violation_error("reflection of G outside G_0 in " + spec_str(spec),
                                  emat_bytes(P(), m));
  }

  // brute-force scan of E(G) for symplectic reflections
  ElementSet closed_form(4);
  EMat smat = emat_from(P(), s_matrix());
  for (std::size_t i : rg) {
    EMat gv = evee(P(), g.eset().mat(i));
    closed_form.insert(gv.e);
    inv.g0vee_part.push_back(emat_to(P(), gv));
  }
  for (unsigned k = 0; k < d; ++k) {
    // z^vee s with z = zeta_d^k I_2, so z^vee = diag(z, z, z^-1, z^-1)
    Vid z = P().intern(root_of_unity(d, static_cast<long>(k)));
    EMat zv = evee(P(), emat_scale(P(), z, emat_identity(P(), 2)));
    EMat el = emat_mul(P(), zv, smat);
    closed_form.insert(el.e);
    inv.dd_part.push_back(emat_to(P(), el));
  }
  if (closed_form.size() != rg.size() + d)
    throw lemma_violation_error("closed-form reflection sets overlap in " + spec_str(spec), "");

  std::vector<std::size_t> s_hits = scan_rank(eg, 2);
  const CycMatrix& omega = symplectic_form_4();
  for (std::size_t i : s_hits) {
    EMat t = eg.eset().mat(i);
    if (!closed_form.contains(t.e))
      throw lemma_violation_error(
          "symplectic reflection outside R(G)^vee u {z^vee s} in " + spec_str(spec),
          emat_bytes(P(), t));
    CycMatrix tm = emat_to(P(), t);
    if (!preserves_form(tm, omega))
      throw lemma_violation_error("reflection does not preserve the form in " + spec_str(spec),
                                  emat_bytes(P(), t));
    inv.symplectic_reflections.push_back(std::move(tm));
  }
  if (s_hits.size() != rg.size() + d)
    throw lemma_violation_error(
        "|S(E(G))| = " + std::to_string(s_hits.size()) + " but N + d = " +
            std::to_string(rg.size() + d) + " in " + spec_str(spec),
        "");

  inv.classes = conjugacy_classes(eg, inv.symplectic_reflections);
  inv.dd_classes = conjugacy_classes(eg, inv.dd_part);
  unsigned expected = spec.kind == FamilyKindId::OT ? 1 : 2;
  if (inv.dd_classes.size() != expected)
    throw lemma_violation_error(
        "D_d-part class count " + std::to_string(inv.dd_classes.size()) + " != " +
            std::to_string(expected) + " in " + spec_str(spec),
        emat_bytes(P(), emat_from(P(), inv.dd_classes[0].rep)));

  inv.complex_reflections = complex_reflections(g);
  return inv;
}

} // namespace srg
