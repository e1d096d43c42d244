#pragma once

#include "abideal/rootsys.hpp"

#include <vector>

namespace abideal {

// A real affine root: finite part (a root of Delta or its negative) plus an
// integer multiple of delta. Imaginary roots (zero finite part) are never
// materialized.
struct AffineRoot {
  Root finite;
  int level = 0;

  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

bool affine_less(const AffineRoot& x, const AffineRoot& y);
bool is_valid_affine(const RootSystem& rs, const AffineRoot& r);
// level > 0, or level = 0 with a positive finite part.
bool is_positive_affine(const RootSystem& rs, const AffineRoot& r);
AffineRoot affine_neg(const AffineRoot& r);
// a_0 = delta - theta for i = 0, otherwise a_i at level 0.
AffineRoot affine_simple(const RootSystem& rs, int i);

// Linear action of the simple reflection s_i (0 <= i <= rank) on affine
// roots. For i > 0 the level is untouched; s_0 reflects the finite part in
// theta and shifts the level by (finite, theta^vee).
AffineRoot reflect_affine(const RootSystem& rs, int i, const AffineRoot& r);

// A word in the affine simple reflections, letters[0] being the leftmost
// factor: w = s_{letters[0]} s_{letters[1]} ... (the rightmost letter acts
// first). Inversion set and reduced flag are cached at construction.
struct WeylWord {
  std::vector<int> letters;
  std::vector<AffineRoot> inversions;  // sorted by affine_less
  bool reduced = false;

  static WeylWord make(const RootSystem& rs, std::vector<int> letters);
  int length() const { return static_cast<int>(letters.size()); }
  friend bool operator==(const WeylWord&, const WeylWord&) = default;
};

std::vector<int> reversed_letters(const std::vector<int>& letters);

AffineRoot apply_word_linear(const RootSystem& rs, const std::vector<int>& letters,
                             AffineRoot r);
AffineRoot apply_word_linear_inverse(const RootSystem& rs, const std::vector<int>& letters,
                                     AffineRoot r);

// N(w) = {a in positive affine roots | w(a) negative}, computed by the word
// recursion: prepending s_i inserts u^-1(a_i) when positive and removes its
// negative otherwise.
std::vector<AffineRoot> inversion_set(const RootSystem& rs, const std::vector<int>& letters);
// Independent route: scan every candidate beta + k*delta with 0 <= k <=
// len(letters). Sound because an inversion of a length-l word has level <= l.
std::vector<AffineRoot> inversion_set_direct_scan(const RootSystem& rs,
                                                  const std::vector<int>& letters);

// Interior point of the fundamental alcove: x0 = (sum_i w_i^vee)/h, so that
// (a_i, x0) = 1/h and (theta, x0) = (h-1)/h.
RatVec base_point(const RootSystem& rs);

// Affine-linear ("dot") action on V: s_i fixes the wall (a_i, x) = 0, s_0
// reflects in the wall (theta, x) = 1.
RatVec apply_word_affine(const RootSystem& rs, const std::vector<int>& letters, RatVec x);
RatVec apply_word_affine_inverse(const RootSystem& rs, const std::vector<int>& letters,
                                 RatVec x);

struct RegionFlags {
  bool in_C = false;
  bool in_2C = false;
  bool in_Cs = false;
};

// Membership in the open regions C, 2C, C_s for a point off every wall used;
// throws std::invalid_argument ("ambiguous region") if x lies on one. For
// simply-laced systems C_s has no defining wall and degenerates to 2C.
RegionFlags region(const RootSystem& rs, const RatVec& x);

}  // namespace abideal
