#pragma once

#include "srg/group.hpp"
#include "srg/poly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace srg {

// The rank-4 symplectically primitive group on C^8 of order 82944, given by
// four symplectic reflection generators over Q(i).
const std::vector<CycMatrix>& ws2_generators();
const CycVector& ws2_v(); // (0,0,1,0,0,0,0,-1)^T
const CycVector& ws2_u(); // (0,0,0,1,0,0,1,0)^T, the second fixed vector
// columns w_1..w_6 of the complement basis (entries in Q(zeta_8))
const std::vector<CycVector>& ws2_w_basis();
// the three displayed 6x6 generators of the restricted action
const std::vector<CycMatrix>& ws2_displayed_hw_generators();
const CycMatrix& ws2_form_j6(); // [[0, I3], [-I3, 0]]

// Enumerates the group (order 82944). If cache_dir is nonempty, loads the
// element set from cache_dir/ws2-elements.srgc when valid and writes it
// after a fresh enumeration.
FiniteMatrixGroup build_ws2(std::size_t cap = kDefaultCap,
                            const std::string& cache_dir = "");

// Solves M^T X M = X over all generators. Returns the solution-space
// dimension and, when it is one, the normalized form.
struct InvariantFormResult {
  int solution_dim = 0;
  std::optional<CycMatrix> form; // set when solution_dim == 1
  bool antisymmetric = false;
  bool nondegenerate = false;
};
InvariantFormResult invariant_form(const std::vector<CycMatrix>& gens);

struct WS2Report {
  std::size_t group_order = 0;
  std::size_t orbit_size = 0;
  std::size_t stabilizer_order = 0;
  bool stabilizer_matches_word = false;
  int fixed_dim = 0;
  int complement_dim = 0;
  bool fixed_contains_paper_vectors = false;
  bool complement_matches_w_basis = false;
  bool displayed_generators_in_hw = false;
  bool form_preserved = false;       // every H_W element preserves J6
  bool lagrangian_preserved = false; // <w1,w2,w3> invariant under H_W
  std::vector<unsigned> molien_num_degrees; // of the rank-3 restriction
  bool identified = false;           // order 96, rank 3, reflections, degrees
  InvariantFormResult ambient_form;  // invariant form on C^8
  bool two_method_stabilizer_agreement = false;
  bool full_checks_run = false;

  bool all_pass() const;
};

// The full pipeline: stabilizer of v, fixed space, complement, restriction,
// Lagrangian, Molien identification. With `full`, additionally recomputes
// the stabilizer by filtering all elements and compares.
WS2Report stabilizer_pipeline(const FiniteMatrixGroup& w, bool full = false);

// True iff the action is 3-dimensional of order 96, generated by its
// rank-1-deviation elements, with Molien series 1/((1-t^3)(1-t^4)(1-t^8)).
bool identify_g443(const FiniteMatrixGroup& action3);

// The group H_W of the pipeline (restriction of the stabilizer to the
// complement) and its rank-3 Lagrangian action, for tests.
FiniteMatrixGroup ws2_restricted_group(const FiniteMatrixGroup& w);
FiniteMatrixGroup lagrangian_action(const FiniteMatrixGroup& hw);

// dim of degree-k invariants by exact rank of the averaged symmetric-power
// action (independent of the Molien series route).
unsigned invariant_dim_by_rank(const FiniteMatrixGroup& g, unsigned degree);

} // namespace srg
