#pragma once

#include "abideal/ideals.hpp"
#include "abideal/rootsys.hpp"

#include <optional>
#include <string>
#include <vector>

namespace abideal {

// Candidate subspace of the little adjoint module of the dual algebra,
// spanned by weight lines indexed by short positive roots of the dual
// system (the zero weight never enters).
struct DualSubalgebraCandidate {
  std::vector<Root> roots;  // sorted by root_less, each short positive in the dual

  friend bool operator==(const DualSubalgebraCandidate&, const DualSubalgebraCandidate&) = default;
};

DualSubalgebraCandidate make_candidate(const RootSystem& dual, std::vector<Root> roots);

// Which grading the internal bracket lands in: [V,V] inside the dual algebra
// itself (the two-length ratio-2 cases), or inside the other little adjoint
// copy (the G2 Z3 grading, where only short-root weight sums obstruct).
enum class BracketTarget { adjoint, little_adjoint };

// Coroot image of a long Abelian ideal, as a candidate on the dual side.
// Throws std::invalid_argument if the ideal is not long.
DualSubalgebraCandidate dual_ideal(const RootSystem& rs, const RootSystem& dual,
                                   const AbelianIdeal& ideal);

// Borel stability (mu + beta short => mu + beta in S) and commutativity of
// the internal bracket per target.
bool is_commutative_bstable(const RootSystem& dual, const DualSubalgebraCandidate& s,
                            BracketTarget target);

// DFS over the stability-closed upper sets of the short-positive-root poset,
// filtered by commutativity.
std::vector<DualSubalgebraCandidate> enumerate_commutative_bstable(const RootSystem& dual,
                                                                   BracketTarget target);

// Nonzero weights (short roots, both signs) plus the zero-weight space of
// dimension #Pi_s.
long long little_adjoint_dim(const RootSystem& rs);

struct DualityReport {
  std::string type;
  std::string bracket_target;
  std::size_t long_ideal_count = 0;
  std::size_t dual_candidate_count = 0;
  bool bijection = false;
  std::vector<std::pair<AbelianIdeal, DualSubalgebraCandidate>> witnesses;
  // G2 only: the count under the other commutativity predicate, flagged when
  // it disagrees with the Z3 one.
  std::optional<std::size_t> alt_candidate_count;
  bool alt_flagged = false;
};

// The duality between long ideals and Borel-stable commutative subalgebras:
// coroot images of long_ideals(rs) must coincide with the enumeration on the
// dual side. Defined for B, C, F4, G2 (G2 uses the Z3 bracket target).
DualityReport verify_duality_bijection(SimpleType t);

}  // namespace abideal
