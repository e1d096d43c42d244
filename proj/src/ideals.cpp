#include "abideal/ideals.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace abideal {

namespace {

std::string ideal_str(const std::vector<Root>& roots) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (i) os << ", ";
    os << root_str(roots[i]);
  }
  os << '}';
  return os.str();
}

std::vector<Root> roots_from_indices(const RootSystem& rs, const std::vector<int>& idx) {
  std::vector<Root> out;
  out.reserve(idx.size());
  for (int k : idx) out.push_back(rs.positive_roots()[k]);
  return out;
}

}  // namespace

bool is_abelian_ideal(const RootSystem& rs, const std::vector<Root>& s) {
  for (const Root& r : s)
    if (!rs.is_positive_root(r))
      throw std::invalid_argument("is_abelian_ideal: " + root_str(r) + " is not a positive root");
  // (a) no two members (repeats allowed) sum to a root
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (rs.is_root(root_add(s[i], s[j]))) return false;
  // (b) closed upward under root addition
  for (const Root& gamma : s) {
    for (const Root& nu : rs.positive_roots()) {
      Root t = root_add(gamma, nu);
      if (!rs.is_positive_root(t)) continue;
      if (std::find(s.begin(), s.end(), t) == s.end()) return false;
    }
  }
  return true;
}

std::vector<AbelianIdeal> enumerate_ideals(const RootSystem& rs) {
  const int p = rs.rank();
  std::map<std::vector<int>, std::vector<int>> found;  // sorted root indices -> letters
  std::deque<std::pair<std::vector<int>, std::vector<int>>> queue;
  found.emplace(std::vector<int>{}, std::vector<int>{});
  queue.emplace_back(std::vector<int>{}, std::vector<int>{});

  while (!queue.empty()) {
    auto [ideal, letters] = queue.front();
    queue.pop_front();
    for (int i = 0; i <= p; ++i) {
      AffineRoot r = apply_word_linear_inverse(rs, letters, affine_simple(rs, i));
      if (r.level != 1) continue;
      Root gamma = root_neg(r.finite);
      const int idx = rs.root_index(gamma);
      if (idx < 0) continue;
      if (std::binary_search(ideal.begin(), ideal.end(), idx)) continue;
      std::vector<int> next_ideal = ideal;
      next_ideal.insert(std::upper_bound(next_ideal.begin(), next_ideal.end(), idx), idx);
      if (found.count(next_ideal)) continue;
      std::vector<int> next_letters;
      next_letters.reserve(letters.size() + 1);
      next_letters.push_back(i);
      next_letters.insert(next_letters.end(), letters.begin(), letters.end());
      found.emplace(next_ideal, next_letters);
      queue.emplace_back(std::move(next_ideal), std::move(next_letters));
    }
  }

  if (found.size() != (std::size_t{1} << rs.rank()))
    throw std::logic_error("minuscule enumeration did not reach 2^rank ideals");

  std::vector<AbelianIdeal> out;
  out.reserve(found.size());
  std::vector<std::pair<std::vector<int>, std::vector<int>>> items(found.begin(), found.end());
  std::sort(items.begin(), items.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  for (auto& [idx, letters] : items) {
    AbelianIdeal ideal;
    ideal.roots = roots_from_indices(rs, idx);
    ideal.word = WeylWord::make(rs, letters);
    if (!ideal.word.reduced || ideal.word.length() != static_cast<int>(ideal.roots.size()))
      throw std::logic_error("minuscule word length mismatch");
    out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<std::vector<Root>> oracle_enumerate_ideals(const RootSystem& rs) {
  const int n = static_cast<int>(rs.positive_roots().size());
  if (n > 30)
    throw std::invalid_argument("oracle_enumerate_ideals: more than 30 positive roots");

  // One-step successors gamma -> gamma + nu and pairwise condition-(a)
  // conflicts, precomputed over root indices.
  std::vector<std::vector<int>> succ(n);
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      Root s = root_add(rs.positive_roots()[i], rs.positive_roots()[j]);
      if (rs.is_root(s)) {
        conflict[i][j] = true;
        succ[i].push_back(rs.root_index(s));
      }
    }
  }

  // Decide roots from the top of the poset down; a root may be included only
  // if everything above it already is, so every leaf is an upper set.
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = n - 1 - i;  // descending height
  std::vector<bool> chosen(n, false);
  std::vector<int> current;
  std::vector<std::vector<Root>> out;

  auto dfs = [&](auto&& self, int k) -> void {
    if (k == n) {
      std::vector<int> idx = current;
      std::sort(idx.begin(), idx.end());
      out.push_back(roots_from_indices(rs, idx));
      return;
    }
    const int v = order[k];
    self(self, k + 1);  // exclude v
    bool ok = true;
    for (int s : succ[v])
      if (!chosen[s]) ok = false;
    if (ok)
      for (int c : current)
        if (conflict[v][c]) ok = false;
    if (ok) {
      chosen[v] = true;
      current.push_back(v);
      self(self, k + 1);
      current.pop_back();
      chosen[v] = false;
    }
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return x.size() < y.size();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const Root& a, const Root& b) { return root_less(a, b); });
  });
  return out;
}

std::optional<std::vector<Root>> minuscule_ideal_of(const RootSystem& rs, const WeylWord& w) {
  std::vector<Root> ideal;
  for (const AffineRoot& r : w.inversions) {
    if (r.level != 1) return std::nullopt;
    Root gamma = root_neg(r.finite);
    if (!rs.is_positive_root(gamma)) return std::nullopt;
    ideal.push_back(gamma);
  }
  std::sort(ideal.begin(), ideal.end(), root_less);
  return ideal;
}

Root rootlet(const RootSystem& rs, const AbelianIdeal& ideal) {
  if (ideal.empty()) throw std::invalid_argument("rootlet undefined for the empty ideal");
  AffineRoot r = apply_word_linear(rs, ideal.word.letters, affine_simple(rs, 0));
  r.level += 1;
  if (r.level != 0 || !rs.is_positive_root(r.finite) || !rs.is_long(r.finite))
    throw std::logic_error("rootlet of " + ideal_str(ideal.roots) + " is not a long positive root");
  return r.finite;
}

bool is_long_ideal(const RootSystem& rs, const AbelianIdeal& ideal) {
  for (const Root& r : ideal.roots)
    if (!rs.is_long(r)) return false;
  return true;
}

LongFlags long_characterizations(const RootSystem& rs, const AbelianIdeal& ideal) {
  LongFlags f;
  f.by_roots = is_long_ideal(rs, ideal);

  // s_0 counts as long; letters i > 0 are long iff a_i is.
  f.by_word = true;
  for (int i : ideal.word.letters)
    if (i > 0 && !rs.simple_is_long(i)) f.by_word = false;

  RatVec x = apply_word_affine_inverse(rs, ideal.word.letters, base_point(rs));
  f.by_alcove = region(rs, x).in_Cs;

  if (ideal.empty()) {
    f.by_rootlet = f.by_roots;
  } else {
    const Root tau = rootlet(rs, ideal);
    f.by_rootlet = true;
    for (int i = 1; i <= rs.rank(); ++i)
      if (!rs.simple_is_long(i) && rs.theta().c[i - 1] != tau.c[i - 1]) f.by_rootlet = false;
  }

  if (f.by_roots != f.by_word || f.by_roots != f.by_alcove || f.by_roots != f.by_rootlet) {
    std::ostringstream os;
    os << "long characterizations disagree on " << ideal_str(ideal.roots) << ": roots="
       << f.by_roots << " word=" << f.by_word << " alcove=" << f.by_alcove
       << " rootlet=" << f.by_rootlet;
    throw std::logic_error(os.str());
  }
  return f;
}

std::vector<Root> generators(const RootSystem& rs, const AbelianIdeal& ideal) {
  std::vector<Root> out;
  for (const Root& gamma : ideal.roots) {
    bool minimal = true;
    for (const Root& nu : rs.positive_roots()) {
      Root below = root_sub(gamma, nu);
      if (!rs.is_positive_root(below)) continue;
      if (std::find(ideal.roots.begin(), ideal.roots.end(), below) != ideal.roots.end())
        minimal = false;
    }
    if (minimal) out.push_back(gamma);
  }
  return out;
}

std::vector<AbelianIdeal> long_ideals(const RootSystem& rs) {
  const auto formula = rs.long_ideal_count_formula();  // rejects simply-laced
  std::vector<AbelianIdeal> out;
  for (AbelianIdeal& ideal : enumerate_ideals(rs))
    if (is_long_ideal(rs, ideal)) out.push_back(std::move(ideal));
  if (static_cast<long long>(out.size()) != formula.ratio)
    throw std::logic_error("long-ideal count does not match d^a for " + rs.type().name());
  return out;
}

std::vector<AbelianIdeal> maximal_long_ideals(const RootSystem& rs) {
  std::vector<AbelianIdeal> all = long_ideals(rs);
  std::vector<AbelianIdeal> out;
  for (const AbelianIdeal& candidate : all) {
    bool maximal = true;
    for (const AbelianIdeal& other : all) {
      if (other.size() <= candidate.size()) continue;
      bool contains = true;
      for (const Root& r : candidate.roots)
        if (std::find(other.roots.begin(), other.roots.end(), r) == other.roots.end())
          contains = false;
      if (contains) maximal = false;
    }
    if (maximal) out.push_back(candidate);
  }
  return out;
}

}  // namespace abideal
