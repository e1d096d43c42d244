#pragma once

#include "abideal/affine.hpp"
#include "abideal/rootsys.hpp"

#include <optional>
#include <vector>

namespace abideal {

// An Abelian ideal of the Borel, identified with its set of positive roots,
// together with the minuscule word reaching it (empty word for the empty
// ideal). roots are sorted by root_less.
struct AbelianIdeal {
  std::vector<Root> roots;
  WeylWord word;

  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
};

// Conditions (a) and (b): no two members sum to a root, and the set is closed
// under adding positive roots within Delta. Throws if S contains a non-root.
bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& s);

// BFS over minuscule elements: from w, the letter i extends the ideal by
// gamma whenever w^-1(a_i) = delta - gamma with gamma a fresh positive root.
// Deduplicates by ideal set; returns exactly 2^rank ideals sorted by
// (size, root indices).
std::vector<AbelianIdeal> enumerate_ideals(const RootSystem& rs);

// Independent oracle: DFS over the upper-closed subsets of the root poset
// (gamma <= gamma + nu), pruned by condition (a). No Weyl-group machinery.
// Guarded to systems with at most 30 positive roots.
std::vector<std::vector<Root>> oracle_enumerate_ideals(const RootSystem& rs);

// If the word's inversion set is {delta - gamma | gamma in I}, return I.
std::optional<std::vector<Root>> minuscule_ideal_of(const RootSystem& rs, const WeylWord& w);

// tau(I) = w(a_0) + delta, a long positive root. Throws for the empty ideal.
Root rootlet(const RootSystem& rs, const AbelianIdeal& ideal);

// Every member long; the empty ideal counts as long.
bool is_long_ideal(const RootSystem& rs, const AbelianIdeal& ideal);

struct LongFlags {
  bool by_roots = false;    // I within the long positive roots
  bool by_word = false;     // stored word free of short simple reflections
  bool by_alcove = false;   // w^-1 . x0 inside C_s
  bool by_rootlet = false;  // theta - tau(I) supported on long simples
};

// The four characterizations of a long ideal; they must agree and a
// disagreement throws std::logic_error naming the ideal.
LongFlags long_characterizations(const RootSystem& rs, const AbelianIdeal& ideal);

// Minimal roots of the ideal in the root poset.
std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal);

// Long ideals of a two-length system; the count is asserted against
// d^(#Pi_l) and the volume-formula ratio.
std::vector<AbelianIdeal> long_ideals(const RootSystem& rs);

// Set-inclusion maxima among the long ideals.
std::vector<AbelianIdeal> maximal_long_ideals(const RootSystem& rs);

}  // namespace abideal
