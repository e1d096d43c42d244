#include "abideal/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace abideal {

namespace {

// Frozen Cartan table, Onishchik-Vinberg numbering.
//
//   A_p   a1 - a2 - ... - ap
//   B_p   a1 - ... - a(p-1) => ap          a_i = e_i - e_(i+1), a_p = e_p
//         (a1..a(p-1) long, ap short)
//   C_p   a1 - ... - a(p-1) <= ap          a_i = e_i - e_(i+1), a_p = 2e_p
//         (a1..a(p-1) short, ap long)
//   D_p   a1 - ... - a(p-2) < (a(p-1), ap) a_i = e_i - e_(i+1), a_p = e_(p-1)+e_p
//   E_p   chain 1-3-4-5-...-p, branch 2-4
//   F_4   a1 - a2 <= a3 - a4               a1, a2 short; theta = 2a1+4a2+3a3+2a4
//   G_2   a1 <= a2                         a1 short; theta = 3a1+2a2
//
// Convention: cartan[i][j] = <a_j, a_i^vee>, so the row of a short root
// carries the -2 / -3 entry against its long neighbour.
std::vector<std::vector<int>> cartan_table(SimpleType t) {
  const int p = t.rank;
  std::vector<std::vector<int>> c(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) {  // single bond, 1-based
    c[i - 1][j - 1] = -1;
    c[j - 1][i - 1] = -1;
  };
  auto chain = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1);
  };
  switch (t.family) {
    case Family::A:
      chain(1, p);
      break;
    case Family::B:
      chain(1, p - 1);
      c[p - 2][p - 1] = -1;  // long row
      c[p - 1][p - 2] = -2;  // short row
      break;
    case Family::C:
      chain(1, p - 1);
      c[p - 2][p - 1] = -2;  // short row
      c[p - 1][p - 2] = -1;  // long row
      break;
    case Family::D:
      chain(1, p - 1);
      bond(p - 2, p);
      break;
    case Family::E:
      bond(1, 3);
      chain(3, p);
      bond(2, 4);
      break;
    case Family::F:
      c[0][1] = -1;
      c[1][0] = -1;
      c[1][2] = -2;  // short row vs long neighbour
      c[2][1] = -1;
      c[2][3] = -1;
      c[3][2] = -1;
      break;
    case Family::G:
      c[0][1] = -3;  // short row
      c[1][0] = -1;
      break;
  }
  return c;
}

std::vector<std::vector<int>> transpose(const std::vector<std::vector<int>>& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];
  return t;
}

}  // namespace

SimpleType SimpleType::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("type string too short: '" + std::string(s) + "'");
  const char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G') throw std::invalid_argument("unknown family letter in '" + std::string(s) + "'");
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("bad rank in type string '" + std::string(s) + "'");
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank out of range in '" + std::string(s) + "'");
  }
  SimpleType t{static_cast<Family>(f), rank};
  if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.name());
  return t;
}

std::string SimpleType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

bool SimpleType::admissible() const {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType dual_type(SimpleType t) {
  if (t.family == Family::B) return {Family::C, t.rank};
  if (t.family == Family::C) return {Family::B, t.rank};
  return t;
}

int Root::height() const { return std::accumulate(c.begin(), c.end(), 0); }

bool root_less(const Root& x, const Root& y) {
  const int hx = x.height(), hy = y.height();
  if (hx != hy) return hx < hy;
  return x.c < y.c;
}

Root root_add(const Root& x, const Root& y) {
  Root out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += y.c[i];
  return out;
}

Root root_sub(const Root& x, const Root& y) {
  Root out = x;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= y.c[i];
  return out;
}

Root root_neg(const Root& x) {
  Root out = x;
  for (auto& v : out.c) v = -v;
  return out;
}

std::string root_str(const Root& x) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    const int v = x.c[i];
    if (v == 0) continue;
    if (!first && v > 0) os << '+';
    if (v == -1)
      os << '-';
    else if (v != 1)
      os << v;
    os << 'a' << (i + 1);
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

long long classical_positive_count(SimpleType t) {
  const long long p = t.rank;
  switch (t.family) {
    case Family::A: return p * (p + 1) / 2;
    case Family::B:
    case Family::C: return p * p;
    case Family::D: return p * (p - 1);
    case Family::E: return t.rank == 6 ? 36 : (t.rank == 7 ? 63 : 120);
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

RootSystem RootSystem::build(SimpleType t) {
  if (!t.admissible()) throw std::invalid_argument("inadmissible type " + t.name());
  return from_cartan(cartan_table(t), t);
}

RootSystem RootSystem::dualize() const {
  return from_cartan(transpose(cartan_), dual_type(type_));
}

RootSystem RootSystem::from_cartan(std::vector<std::vector<int>> cartan, SimpleType label) {
  RootSystem rs;
  rs.type_ = label;
  rs.cartan_ = std::move(cartan);
  const int p = rs.rank();

  // Symmetrize: d_i * cartan[i][j] = d_j * cartan[j][i], scaled so the short
  // simple roots get d_i = 1, i.e. norm 2.
  std::vector<Rat> d(p, Rat(0));
  d[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < p; ++j) {
      if (j == i || rs.cartan_[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * rs.cartan_[i][j] / rs.cartan_[j][i];
      stack.push_back(j);
    }
  }
  Rat dmin = d[0];
  for (const auto& v : d) {
    if (v == 0) throw std::logic_error("Dynkin diagram not connected");
    dmin = std::min(dmin, v);
  }
  rs.simple_norm_half_.resize(p);
  for (int i = 0; i < p; ++i) {
    Rat scaled = d[i] / dmin;
    if (denominator(scaled) != 1) throw std::logic_error("non-integral symmetrizer");
    rs.simple_norm_half_[i] = static_cast<int>(numerator(scaled));
  }
  rs.gram_.assign(p, std::vector<int>(p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) rs.gram_[i][j] = rs.simple_norm_half_[i] * rs.cartan_[i][j];

  // Closure generation by height, using root strings: beta + a_i is a root
  // iff q = p_down - <beta, a_i^vee> >= 1.
  std::vector<Root> simples(p);
  for (int i = 0; i < p; ++i) {
    simples[i].c.assign(p, 0);
    simples[i].c[i] = 1;
  }
  std::vector<Root> current = simples;
  for (int i = 0; i < p; ++i) {
    rs.positive_.push_back(simples[i]);
    rs.index_.emplace(simples[i].c, 0);  // index fixed after the sort
  }
  while (!current.empty()) {
    std::vector<Root> next;
    for (const Root& beta : current) {
      for (int i = 1; i <= p; ++i) {
        Root cand = root_add(beta, simples[i - 1]);
        if (rs.index_.count(cand.c)) continue;
        int pdown = 0;
        Root probe = root_sub(beta, simples[i - 1]);
        while (rs.index_.count(probe.c)) {
          ++pdown;
          probe = root_sub(probe, simples[i - 1]);
        }
        const int q = pdown - rs.pairing(beta, i);
        if (q >= 1) {
          rs.index_.emplace(cand.c, 0);
          next.push_back(std::move(cand));
        }
      }
    }
    for (const Root& r : next) rs.positive_.push_back(r);
    current = std::move(next);
  }

  std::sort(rs.positive_.begin(), rs.positive_.end(), root_less);
  rs.index_.clear();
  for (std::size_t k = 0; k < rs.positive_.size(); ++k)
    rs.index_[rs.positive_[k].c] = static_cast<int>(k);

  if (static_cast<long long>(rs.positive_.size()) != classical_positive_count(label))
    throw std::logic_error("positive-root count mismatch for " + label.name());

  // theta: the unique root of maximal height, dominating all roots
  // coefficientwise.
  rs.theta_ = rs.positive_.back();
  for (const Root& r : rs.positive_) {
    if (&r != &rs.positive_.back() && r.height() == rs.theta_.height())
      throw std::logic_error("highest root not unique");
    for (int j = 0; j < p; ++j)
      if (r.c[j] > rs.theta_.c[j]) throw std::logic_error("theta not dominant in coefficients");
  }
  rs.coxeter_ = 1 + rs.theta_.height();

  const long long theta_norm = rs.norm2(rs.theta_);
  if (theta_norm % 2 != 0) throw std::logic_error("odd theta norm");
  rs.d_ = static_cast<int>(theta_norm / 2);
  for (int i = 0; i < p; ++i)
    if (rs.simple_norm_half_[i] != 1 && rs.simple_norm_half_[i] != rs.d_)
      throw std::logic_error("more than two root lengths");

  rs.a_ = 0;
  for (int i = 1; i <= p; ++i)
    if (rs.simple_is_long(i)) ++rs.a_;

  if (rs.d_ > 1) {
    for (const Root& r : rs.positive_) {
      if (rs.norm2(r) == theta_norm) continue;
      bool dominant = true;
      for (int i = 1; i <= p; ++i)
        if (rs.pairing(r, i) < 0) dominant = false;
      if (!dominant) continue;
      if (rs.theta_s_) throw std::logic_error("short dominant root not unique");
      rs.theta_s_ = r;
    }
    if (!rs.theta_s_) throw std::logic_error("no short dominant root in two-length system");
  }
  return rs;
}

bool RootSystem::simple_is_long(int i) const {
  // Simply-laced systems report every root long.
  return simple_norm_half_.at(i - 1) == d_;
}

bool RootSystem::is_positive_root(const Root& x) const { return index_.count(x.c) != 0; }

bool RootSystem::is_root(const Root& x) const {
  return is_positive_root(x) || is_positive_root(root_neg(x));
}

int RootSystem::root_index(const Root& x) const {
  auto it = index_.find(x.c);
  return it == index_.end() ? -1 : it->second;
}

std::optional<Root> RootSystem::sum_roots(const Root& x, const Root& y) const {
  if (!is_root(x) || !is_root(y)) throw std::invalid_argument("sum_roots: argument is not a root");
  Root s = root_add(x, y);
  if (is_root(s)) return s;
  return std::nullopt;
}

long long RootSystem::inner_int(const Root& x, const Root& y) const {
  long long acc = 0;
  const int p = rank();
  for (int i = 0; i < p; ++i) {
    if (x.c[i] == 0) continue;
    long long row = 0;
    for (int j = 0; j < p; ++j) row += static_cast<long long>(gram_[i][j]) * y.c[j];
    acc += static_cast<long long>(x.c[i]) * row;
  }
  return acc;
}

Rat RootSystem::inner(const RatVec& u, const RatVec& v) const {
  const int p = rank();
  if (static_cast<int>(u.size()) != p || static_cast<int>(v.size()) != p)
    throw std::invalid_argument("inner: vector of wrong length");
  Rat acc = 0;
  for (int i = 0; i < p; ++i) {
    if (u[i] == 0) continue;
    Rat row = 0;
    for (int j = 0; j < p; ++j) row += Rat(gram_[i][j]) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

RatVec RootSystem::to_vec(const Root& x) const {
  RatVec v(x.c.size());
  for (std::size_t i = 0; i < x.c.size(); ++i) v[i] = x.c[i];
  return v;
}

int RootSystem::pairing(const Root& x, int i) const {
  const auto& row = cartan_.at(i - 1);
  int acc = 0;
  for (std::size_t j = 0; j < row.size(); ++j) acc += row[j] * x.c[j];
  return acc;
}

RatVec RootSystem::coroot(const Root& x) const {
  if (!is_root(x)) throw std::invalid_argument("coroot: not a root");
  const Rat f = Rat(2) / Rat(norm2(x));
  RatVec v = to_vec(x);
  return vec_scale(f, v);
}

Root RootSystem::coroot_in_dual_basis(const Root& x) const {
  if (!is_root(x)) throw std::invalid_argument("coroot_in_dual_basis: not a root");
  // x^vee = sum_i b_i (a_i,a_i)/(x,x) a_i^vee; the divisions are exact.
  const long long n = norm2(x);
  Root out;
  out.c.resize(x.c.size());
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    const long long num = static_cast<long long>(x.c[i]) * 2 * simple_norm_half_[i];
    if (num % n != 0) throw std::logic_error("coroot coordinates not integral");
    out.c[i] = static_cast<int>(num / n);
  }
  return out;
}

LengthClass RootSystem::length_class(const Root& x) const {
  if (!is_root(x)) throw std::invalid_argument("length_class: not a root");
  return norm2(x) == norm2(theta_) ? LengthClass::long_root : LengthClass::short_root;
}

RatVec RootSystem::fundamental_coweight(int i) const {
  const int p = rank();
  if (i < 1 || i > p) throw std::invalid_argument("fundamental_coweight: index out of range");
  std::vector<RatVec> a(p, RatVec(p));
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < p; ++c) a[r][c] = gram_[r][c];
  RatVec b = zero_vec(p);
  b[i - 1] = 1;
  RatVec w = solve_linear(std::move(a), std::move(b));
  for (int j = 1; j <= p; ++j) {
    RatVec aj = zero_vec(p);
    aj[j - 1] = 1;
    if (inner(w, aj) != Rat(j == i ? 1 : 0))
      throw std::logic_error("fundamental coweight failed its defining property");
  }
  return w;
}

RootSystem::CountFormula RootSystem::long_ideal_count_formula() const {
  if (!theta_s_) throw std::invalid_argument(type_.name() + " has no short dominant root");
  long long num = 1, den = 1;
  for (int j = 0; j < rank(); ++j) {
    num *= theta_.c[j];
    den *= theta_s_->c[j];
  }
  if (num % den != 0) throw std::logic_error("count formula: non-integral ratio");
  CountFormula f{num / den, 1};
  for (int k = 0; k < a_; ++k) f.power *= d_;
  if (f.ratio != f.power) throw std::logic_error("count formula: ratio != d^a");
  return f;
}

}  // namespace abideal
