#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace abideal {

// All geometry is exact. Points of the ambient space V are vectors of
// arbitrary-precision rationals in the simple-root basis, so alcove
// membership tests never round and overflow cannot occur.
using Rat = boost::multiprecision::cpp_rational;
using RatVec = std::vector<Rat>;

inline RatVec zero_vec(std::size_t n) { return RatVec(n, Rat(0)); }

RatVec vec_add(const RatVec& u, const RatVec& v);
RatVec vec_sub(const RatVec& u, const RatVec& v);
RatVec vec_scale(const Rat& c, const RatVec& v);

std::string rat_str(const Rat& r);

// Exact Gaussian elimination for the small dense solves (rank <= 8).
// `a` must be square and nonsingular.
RatVec solve_linear(std::vector<RatVec> a, RatVec b);

}  // namespace abideal
