#pragma once

#include "abideal/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace abideal {

enum class Family : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G',
};

// Admissible pairs: A_p (p>=1), B_p (p>=2), C_p (p>=2), D_p (p>=3; D3 == A3),
// E6/E7/E8, F4, G2.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  // "B4", "f4", "g2": case-insensitive family letter, decimal rank.
  static SimpleType parse(std::string_view s);
  std::string name() const;
  bool admissible() const;
  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

// B_p <-> C_p; every other family is self-dual.
SimpleType dual_type(SimpleType t);

// A root as integer coordinates over the simple roots a1..ap (c[0] is the a1
// coefficient). Roots of a system have all coordinates of one sign.
struct Root {
  std::vector<int> c;

  int height() const;
  friend bool operator==(const Root&, const Root&) = default;
};

// Height, then lexicographic coordinates. Fixes every set ordering and every
// serialized listing in the project.
bool root_less(const Root& x, const Root& y);

Root root_add(const Root& x, const Root& y);
Root root_sub(const Root& x, const Root& y);
Root root_neg(const Root& x);
std::string root_str(const Root& x);  // "2a1+4a2+3a3+2a4"

enum class LengthClass { long_root, short_root };

class RootSystem {
 public:
  // Closure construction from the frozen Cartan table. Throws
  // std::invalid_argument naming the violated constraint for an inadmissible
  // type.
  static RootSystem build(SimpleType t);

  // The dual system: simple roots are the coroots a_i^vee at the same index,
  // Cartan matrix transposed. Long and short roots exchange.
  RootSystem dualize() const;

  const SimpleType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.size()); }
  // cartan[i][j] = <a_j, a_i^vee> = 2(a_i,a_j)/(a_i,a_i)
  const std::vector<std::vector<int>>& cartan() const { return cartan_; }
  // gram[i][j] = (a_i, a_j), normalized so short simple roots have norm 2;
  // entries are integral under that normalization. gram = diag(d_i) * cartan.
  const std::vector<std::vector<int>>& gram() const { return gram_; }
  // Sorted by root_less (height, then lex).
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& theta() const { return theta_; }
  const std::optional<Root>& theta_s() const { return theta_s_; }
  int length_ratio_d() const { return d_; }        // |theta|^2/|theta_s|^2; 1 if simply laced
  int long_simple_count_a() const { return a_; }   // #Pi_l
  bool simple_is_long(int i) const;                // 1-based
  int coxeter_number() const { return coxeter_; }  // 1 + height(theta)

  bool is_root(const Root& x) const;  // membership in +-Delta
  bool is_positive_root(const Root& x) const;
  // Index into positive_roots(), -1 if not a positive root.
  int root_index(const Root& x) const;

  // x + y if it is again a root, otherwise nullopt. Arguments must be roots.
  std::optional<Root> sum_roots(const Root& x, const Root& y) const;

  long long inner_int(const Root& x, const Root& y) const;  // (x,y), exact
  long long norm2(const Root& x) const { return inner_int(x, x); }
  Rat inner(const RatVec& u, const RatVec& v) const;
  RatVec to_vec(const Root& x) const;
  // <x, a_i^vee>, 1-based i.
  int pairing(const Root& x, int i) const;

  RatVec coroot(const Root& x) const;  // 2x/(x,x) in the simple-root basis
  // Coordinates of x^vee over the dual simple roots {a_i^vee}; the
  // divisions are exact for every root.
  Root coroot_in_dual_basis(const Root& x) const;

  LengthClass length_class(const Root& x) const;  // x must be a root
  bool is_long(const Root& x) const { return length_class(x) == LengthClass::long_root; }

  // (w_i^vee, a_j) = delta_ij, 1-based i; defining property asserted after
  // the solve.
  RatVec fundamental_coweight(int i) const;

  struct CountFormula {
    long long ratio;  // prod m_i / prod c_i
    long long power;  // d^(#Pi_l)
  };
  // Both sides of the long-ideal counting identity; equality asserted.
  // Throws std::invalid_argument for simply-laced systems.
  CountFormula long_ideal_count_formula() const;

 private:
  RootSystem() = default;
  static RootSystem from_cartan(std::vector<std::vector<int>> cartan, SimpleType label);

  SimpleType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<int> simple_norm_half_;  // d_i = (a_i,a_i)/2
  std::vector<Root> positive_;
  std::map<std::vector<int>, int> index_;
  Root theta_;
  std::optional<Root> theta_s_;
  int d_ = 1;
  int a_ = 0;
  int coxeter_ = 0;
};

// Classical positive-root count for an admissible type.
long long classical_positive_count(SimpleType t);

}  // namespace abideal
