#pragma once

#include <vector>

namespace abideal {

// Matrix-unit position in one of the two off-diagonal blocks of gl_n cut by
// gl_r x gl_(n-r): either row <= r < col (upper) or col <= r < row (lower).
// 1-based.
struct BlockPosition {
  int row = 0;
  int col = 0;

  friend bool operator==(const BlockPosition&, const BlockPosition&) = default;
};

// binomial(n, r) + (n - r) * binomial(n - 1, r - 1)
long long gl_formula(int n, int r);

// All subsets of matrix units in the off-diagonal blocks that are stable
// under the upper-triangular Borel of gl_r x gl_(n-r) and pairwise
// commuting. Guarded to 2r(n-r) <= 24 positions.
std::vector<std::vector<BlockPosition>> gl_enumerate(int n, int r);

long long gl_count(int n, int r);
bool gl_verify(int n, int r);

}  // namespace abideal
