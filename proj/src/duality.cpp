#include "abideal/duality.hpp"

#include <algorithm>
#include <stdexcept>

namespace abideal {

namespace {

bool candidate_less(const DualSubalgebraCandidate& x, const DualSubalgebraCandidate& y) {
  if (x.roots.size() != y.roots.size()) return x.roots.size() < y.roots.size();
  return std::lexicographical_compare(
      x.roots.begin(), x.roots.end(), y.roots.begin(), y.roots.end(),
      [](const Root& a, const Root& b) { return root_less(a, b); });
}

}  // namespace

DualSubalgebraCandidate make_candidate(const RootSystem& dual, std::vector<Root> roots) {
  for (const Root& r : roots) {
    if (!dual.is_positive_root(r) || dual.is_long(r))
      throw std::invalid_argument("candidate member " + root_str(r) +
                                  " is not a short positive root of the dual system");
  }
  std::sort(roots.begin(), roots.end(), root_less);
  return DualSubalgebraCandidate{std::move(roots)};
}

DualSubalgebraCandidate dual_ideal(const RootSystem& rs, const RootSystem& dual,
                                   const AbelianIdeal& ideal) {
  if (!is_long_ideal(rs, ideal))
    throw std::invalid_argument("dual_ideal: ideal contains a short root");
  std::vector<Root> image;
  image.reserve(ideal.size());
  for (const Root& r : ideal.roots) image.push_back(rs.coroot_in_dual_basis(r));
  return make_candidate(dual, std::move(image));
}

bool is_commutative_bstable(const RootSystem& dual, const DualSubalgebraCandidate& s,
                            BracketTarget target) {
  auto in_s = [&](const Root& r) {
    return std::find(s.roots.begin(), s.roots.end(), r) != s.roots.end();
  };
  // Stability: raising by any positive root must stay inside S whenever it
  // lands on a weight of the module (a short root).
  for (const Root& mu : s.roots) {
    for (const Root& beta : dual.positive_roots()) {
      Root t = root_add(mu, beta);
      if (dual.is_root(t) && !dual.is_long(t) && !in_s(t)) return false;
    }
  }
  // Commutativity of the internal bracket.
  for (std::size_t i = 0; i < s.roots.size(); ++i) {
    for (std::size_t j = i; j < s.roots.size(); ++j) {
      Root t = root_add(s.roots[i], s.roots[j]);
      if (!dual.is_root(t)) continue;
      if (target == BracketTarget::adjoint) return false;
      if (!dual.is_long(t)) return false;  // Z3: only short sums obstruct
    }
  }
  return true;
}

std::vector<DualSubalgebraCandidate> enumerate_commutative_bstable(const RootSystem& dual,
                                                                   BracketTarget target) {
  // Universe: short positive roots, ascending height.
  std::vector<Root> shorts;
  for (const Root& r : dual.positive_roots())
    if (!dual.is_long(r)) shorts.push_back(r);
  const int n = static_cast<int>(shorts.size());

  auto short_index = [&](const Root& r) {
    for (int k = 0; k < n; ++k)
      if (shorts[k] == r) return k;
    return -1;
  };

  std::vector<std::vector<int>> succ(n);
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    for (const Root& beta : dual.positive_roots()) {
      Root t = root_add(shorts[i], beta);
      if (dual.is_root(t) && !dual.is_long(t)) succ[i].push_back(short_index(t));
    }
    for (int j = 0; j < n; ++j) {
      Root t = root_add(shorts[i], shorts[j]);
      if (!dual.is_root(t)) continue;
      if (target == BracketTarget::adjoint || !dual.is_long(t)) conflict[i][j] = true;
    }
  }

  std::vector<bool> chosen(n, false);
  std::vector<int> current;
  std::vector<DualSubalgebraCandidate> out;
  auto dfs = [&](auto&& self, int k) -> void {
    if (k < 0) {
      std::vector<Root> roots;
      for (int v : current) roots.push_back(shorts[v]);
      out.push_back(make_candidate(dual, std::move(roots)));
      return;
    }
    self(self, k - 1);  // exclude
    bool ok = true;
    for (int s : succ[k])
      if (!chosen[s]) ok = false;
    if (ok)
      for (int c : current)
        if (conflict[k][c]) ok = false;
    if (ok) {
      chosen[k] = true;
      current.push_back(k);
      self(self, k - 1);
      current.pop_back();
      chosen[k] = false;
    }
  };
  dfs(dfs, n - 1);  // decide from the top of the poset down
  std::sort(out.begin(), out.end(), candidate_less);
  return out;
}

long long little_adjoint_dim(const RootSystem& rs) {
  if (rs.length_ratio_d() == 1)
    throw std::invalid_argument(rs.type().name() + " has no little adjoint module");
  long long shorts = 0;
  for (const Root& r : rs.positive_roots())
    if (!rs.is_long(r)) ++shorts;
  long long pi_s = rs.rank() - rs.long_simple_count_a();
  return 2 * shorts + pi_s;
}

DualityReport verify_duality_bijection(SimpleType t) {
  if (t.family != Family::B && t.family != Family::C && t.family != Family::F &&
      t.family != Family::G)
    throw std::invalid_argument("duality defined for B, C, F4, G2 only; got " + t.name());

  const RootSystem rs = RootSystem::build(t);
  const RootSystem dual = rs.dualize();
  const BracketTarget target =
      t.family == Family::G ? BracketTarget::little_adjoint : BracketTarget::adjoint;

  DualityReport report;
  report.type = t.name();
  report.bracket_target = target == BracketTarget::adjoint ? "adjoint" : "little_adjoint";

  std::vector<AbelianIdeal> longs = long_ideals(rs);
  std::vector<DualSubalgebraCandidate> forward;
  for (const AbelianIdeal& ideal : longs) forward.push_back(dual_ideal(rs, dual, ideal));

  std::vector<DualSubalgebraCandidate> backward = enumerate_commutative_bstable(dual, target);

  report.long_ideal_count = longs.size();
  report.dual_candidate_count = backward.size();

  std::vector<DualSubalgebraCandidate> sorted_forward = forward;
  std::sort(sorted_forward.begin(), sorted_forward.end(), candidate_less);
  report.bijection = sorted_forward == backward;

  for (std::size_t i = 0; i < longs.size(); ++i)
    report.witnesses.emplace_back(longs[i], forward[i]);

  if (t.family == Family::G) {
    report.alt_candidate_count =
        enumerate_commutative_bstable(dual, BracketTarget::adjoint).size();
    report.alt_flagged = *report.alt_candidate_count != report.dual_candidate_count;
  }
  return report;
}

}  // namespace abideal
