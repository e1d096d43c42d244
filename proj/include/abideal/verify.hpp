#pragma once

#include "abideal/rootsys.hpp"

#include <string>
#include <vector>

namespace abideal {

struct CheckResult {
  std::string name;
  std::string type;
  bool pass = false;
  std::string detail;  // on failure: the proposition and a minimal witness
};

// The per-type invariant suite: root-system soundness, Peterson's count, the
// ideal conditions, the alcove-geometry properties, the long-ideal
// equivalences, the counting formula, and the little-adjoint duality where
// each applies.
std::vector<CheckResult> verify_type(SimpleType t);

// A1.. through G2, capped at max_rank.
std::vector<SimpleType> default_type_list(int max_rank);

}  // namespace abideal
