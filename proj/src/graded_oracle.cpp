#include "abideal/graded_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace abideal {

namespace {

void check_args(int n, int r) {
  if (r < 1 || r >= n) throw std::invalid_argument("gl oracle requires 1 <= r < n");
}

}  // namespace

long long gl_formula(int n, int r) {
  check_args(n, r);
  auto binomial = [](int m, int k) {
    long long acc = 1;
    for (int i = 1; i <= k; ++i) acc = acc * (m - k + i) / i;
    return acc;
  };
  return binomial(n, r) + static_cast<long long>(n - r) * binomial(n - 1, r - 1);
}

std::vector<std::vector<BlockPosition>> gl_enumerate(int n, int r) {
  check_args(n, r);
  const int npos = 2 * r * (n - r);
  if (npos > 24)
    throw std::invalid_argument(
        "gl_enumerate: more than 24 positions; use gl_formula for the closed form");

  std::vector<BlockPosition> pos;
  for (int i = 1; i <= r; ++i)
    for (int j = r + 1; j <= n; ++j) pos.push_back({i, j});
  for (int i = r + 1; i <= n; ++i)
    for (int j = 1; j <= r; ++j) pos.push_back({i, j});

  auto index_of = [&](int i, int j) {
    for (int k = 0; k < npos; ++k)
      if (pos[k].row == i && pos[k].col == j) return k;
    return -1;
  };

  // Borel raising moves [E_kl, E_ij] for strictly upper-triangular E_kl
  // inside either diagonal block: at most one matrix unit survives, and it
  // stays in the off-diagonal blocks. Stability = closure under these moves.
  std::vector<uint32_t> succ(npos, 0);
  auto add_generator_moves = [&](int k, int l) {
    for (int q = 0; q < npos; ++q) {
      const int i = pos[q].row, j = pos[q].col;
      // [E_kl, E_ij] = delta_li E_kj - delta_jk E_il
      if (l == i) succ[q] |= uint32_t{1} << index_of(k, j);
      if (j == k) succ[q] |= uint32_t{1} << index_of(i, l);
    }
  };
  for (int k = 1; k <= r; ++k)
    for (int l = k + 1; l <= r; ++l) add_generator_moves(k, l);
  for (int k = r + 1; k <= n; ++k)
    for (int l = k + 1; l <= n; ++l) add_generator_moves(k, l);

  // Commutativity: [E_ij, E_kl] = delta_jk E_il - delta_li E_kj must vanish;
  // only upper/lower pairs can fail.
  std::vector<uint32_t> clash(npos, 0);
  for (int q = 0; q < npos; ++q)
    for (int w = 0; w < npos; ++w)
      if (pos[q].col == pos[w].row || pos[w].col == pos[q].row) clash[q] |= uint32_t{1} << w;

  // Topological order for the stability DAG: both move kinds strictly
  // decrease row - col, so deciding positions by ascending row - col puts
  // every successor before the positions that need it.
  std::vector<int> order(npos);
  for (int k = 0; k < npos; ++k) order[k] = k;
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return pos[x].row - pos[x].col < pos[y].row - pos[y].col;
  });

  std::vector<std::vector<BlockPosition>> out;
  uint32_t chosen = 0;
  auto dfs = [&](auto&& self, int k) -> void {
    if (k == npos) {
      std::vector<BlockPosition> subset;
      for (int q = 0; q < npos; ++q)
        if (chosen & (uint32_t{1} << q)) subset.push_back(pos[q]);
      out.push_back(std::move(subset));
      return;
    }
    const int q = order[k];
    self(self, k + 1);
    if ((succ[q] & ~chosen) == 0 && (clash[q] & chosen) == 0) {
      chosen |= uint32_t{1} << q;
      self(self, k + 1);
      chosen &= ~(uint32_t{1} << q);
    }
  };
  dfs(dfs, 0);

  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(
        x.begin(), x.end(), y.begin(), y.end(), [](const BlockPosition& a, const BlockPosition& b) {
          return a.row != b.row ? a.row < b.row : a.col < b.col;
        });
  });
  return out;
}

long long gl_count(int n, int r) { return static_cast<long long>(gl_enumerate(n, r).size()); }

bool gl_verify(int n, int r) { return gl_count(n, r) == gl_formula(n, r); }

}  // namespace abideal
