#include "abideal/affine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace abideal {

bool affine_less(const AffineRoot& x, const AffineRoot& y) {
  if (x.level != y.level) return x.level < y.level;
  return x.finite.c < y.finite.c;
}

bool is_valid_affine(const RootSystem& rs, const AffineRoot& r) { return rs.is_root(r.finite); }

bool is_positive_affine(const RootSystem& rs, const AffineRoot& r) {
  if (r.level != 0) return r.level > 0;
  return rs.is_positive_root(r.finite);
}

AffineRoot affine_neg(const AffineRoot& r) { return {root_neg(r.finite), -r.level}; }

AffineRoot affine_simple(const RootSystem& rs, int i) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("affine_simple: letter out of range");
  if (i == 0) return {root_neg(rs.theta()), 1};
  Root a;
  a.c.assign(rs.rank(), 0);
  a.c[i - 1] = 1;
  return {a, 0};
}

AffineRoot reflect_affine(const RootSystem& rs, int i, const AffineRoot& r) {
  if (i < 0 || i > rs.rank()) throw std::invalid_argument("reflect_affine: letter out of range");
  if (i > 0) {
    const int m = rs.pairing(r.finite, i);
    Root f = r.finite;
    f.c[i - 1] -= m;
    return {f, r.level};
  }
  // s_0(beta + k delta) = s_theta(beta) + (k + (beta, theta^vee)) delta
  const long long num = 2 * rs.inner_int(r.finite, rs.theta());
  const long long den = rs.norm2(rs.theta());
  if (num % den != 0) throw std::logic_error("non-integral coroot pairing");
  const int m = static_cast<int>(num / den);
  Root f = r.finite;
  for (std::size_t j = 0; j < f.c.size(); ++j) f.c[j] -= m * rs.theta().c[j];
  return {f, r.level + m};
}

std::vector<int> reversed_letters(const std::vector<int>& letters) {
  return {letters.rbegin(), letters.rend()};
}

AffineRoot apply_word_linear(const RootSystem& rs, const std::vector<int>& letters,
                             AffineRoot r) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) r = reflect_affine(rs, *it, r);
  return r;
}

AffineRoot apply_word_linear_inverse(const RootSystem& rs, const std::vector<int>& letters,
                                     AffineRoot r) {
  for (int i : letters) r = reflect_affine(rs, i, r);
  return r;
}

std::vector<AffineRoot> inversion_set(const RootSystem& rs, const std::vector<int>& letters) {
  std::set<AffineRoot, decltype(&affine_less)> inv(&affine_less);
  // Build suffixes u_k = s_{letters[k]} ... s_{letters[n-1]} from the right.
  for (int k = static_cast<int>(letters.size()) - 1; k >= 0; --k) {
    AffineRoot r = affine_simple(rs, letters[k]);
    for (std::size_t j = k + 1; j < letters.size(); ++j) r = reflect_affine(rs, letters[j], r);
    if (is_positive_affine(rs, r))
      inv.insert(r);
    else
      inv.erase(affine_neg(r));
  }
  return {inv.begin(), inv.end()};
}

std::vector<AffineRoot> inversion_set_direct_scan(const RootSystem& rs,
                                                  const std::vector<int>& letters) {
  std::vector<AffineRoot> out;
  const int maxlevel = static_cast<int>(letters.size());
  for (int k = 0; k <= maxlevel; ++k) {
    for (const Root& beta : rs.positive_roots()) {
      for (int sign = 0; sign < 2; ++sign) {
        if (k == 0 && sign == 1) continue;  // level 0: positive finite part only
        AffineRoot cand{sign ? root_neg(beta) : beta, k};
        if (!is_positive_affine(rs, apply_word_linear(rs, letters, cand))) out.push_back(cand);
      }
    }
  }
  std::sort(out.begin(), out.end(), affine_less);
  return out;
}

WeylWord WeylWord::make(const RootSystem& rs, std::vector<int> letters) {
  WeylWord w;
  w.letters = std::move(letters);
  w.inversions = inversion_set(rs, w.letters);
  w.reduced = w.inversions.size() == w.letters.size();
  return w;
}

RatVec base_point(const RootSystem& rs) {
  const int p = rs.rank();
  const int h = rs.coxeter_number();
  RatVec sum = zero_vec(p);
  for (int i = 1; i <= p; ++i) sum = vec_add(sum, rs.fundamental_coweight(i));
  RatVec x0 = vec_scale(Rat(1) / Rat(h), sum);
  for (int i = 1; i <= p; ++i) {
    RatVec ai = zero_vec(p);
    ai[i - 1] = 1;
    if (rs.inner(ai, x0) != Rat(1) / Rat(h)) throw std::logic_error("base point off pattern");
  }
  if (rs.inner(rs.to_vec(rs.theta()), x0) != Rat(h - 1) / Rat(h))
    throw std::logic_error("base point not interior to the alcove");
  return x0;
}

namespace {

RatVec reflect_affine_point(const RootSystem& rs, int i, const RatVec& x) {
  const int p = rs.rank();
  if (i > 0) {
    RatVec ai = zero_vec(p);
    ai[i - 1] = 1;
    const Rat m = rs.inner(x, ai) * 2 / Rat(rs.gram()[i - 1][i - 1]);
    RatVec out = x;
    out[i - 1] -= m;
    return out;
  }
  // s_0 . x = s_theta(x) + theta^vee
  const RatVec th = rs.to_vec(rs.theta());
  const Rat m = rs.inner(x, th) * 2 / Rat(rs.norm2(rs.theta()));
  RatVec out = vec_sub(x, vec_scale(m, th));
  return vec_add(out, rs.coroot(rs.theta()));
}

}  // namespace

RatVec apply_word_affine(const RootSystem& rs, const std::vector<int>& letters, RatVec x) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it)
    x = reflect_affine_point(rs, *it, x);
  return x;
}

RatVec apply_word_affine_inverse(const RootSystem& rs, const std::vector<int>& letters,
                                 RatVec x) {
  for (int i : letters) x = reflect_affine_point(rs, i, x);
  return x;
}

RegionFlags region(const RootSystem& rs, const RatVec& x) {
  const int p = rs.rank();
  bool dominant = true;
  for (int i = 1; i <= p; ++i) {
    RatVec ai = zero_vec(p);
    ai[i - 1] = 1;
    const Rat v = rs.inner(ai, x);
    if (v == 0) throw std::invalid_argument("ambiguous region: x on a simple wall");
    if (v < 0) dominant = false;
  }
  const Rat vt = rs.inner(rs.to_vec(rs.theta()), x);
  if (vt == 1 || vt == 2) throw std::invalid_argument("ambiguous region: x on a theta wall");
  RegionFlags f;
  f.in_C = dominant && vt < 1;
  f.in_2C = dominant && vt < 2;
  if (rs.theta_s()) {
    const Rat vs = rs.inner(rs.to_vec(*rs.theta_s()), x);
    if (vs == 1) throw std::invalid_argument("ambiguous region: x on the theta_s wall");
    f.in_Cs = dominant && vs < 1;
  } else {
    f.in_Cs = f.in_2C;  // no short walls inside 2C
  }
  if ((f.in_C && !f.in_Cs) || (f.in_Cs && !f.in_2C))
    throw std::logic_error("region monotonicity violated");
  return f;
}

}  // namespace abideal
