#include "abideal/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace abideal {

RatVec vec_add(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vec_add: size mismatch");
  RatVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] + v[i];
  return out;
}

RatVec vec_sub(const RatVec& u, const RatVec& v) {
  if (u.size() != v.size()) throw std::invalid_argument("vec_sub: size mismatch");
  RatVec out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[i] = u[i] - v[i];
  return out;
}

RatVec vec_scale(const Rat& c, const RatVec& v) {
  RatVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = c * v[i];
  return out;
}

std::string rat_str(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

RatVec solve_linear(std::vector<RatVec> a, RatVec b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw std::invalid_argument("solve_linear: size mismatch");
  for (const auto& row : a)
    if (row.size() != n) throw std::invalid_argument("solve_linear: matrix not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("solve_linear: singular matrix");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      Rat f = a[row][col] / a[col][col];
      for (std::size_t k = col; k < n; ++k) a[row][k] -= f * a[col][k];
      b[row] -= f * b[col];
    }
  }
  RatVec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

}  // namespace abideal
