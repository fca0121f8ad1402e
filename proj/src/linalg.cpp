#include <altab/linalg.hpp>
#include <altab/error.hpp>

#include <utility>

namespace altab {

std::vector<Rational> solve(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  if (b.size() != n) throw Error(ErrorCode::SizeMismatch, "right-hand side has the wrong size");
  for (const auto& row : a)
    if (row.size() != n) throw Error(ErrorCode::SizeMismatch, "matrix is not square");

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::SingularSystem, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      b[r] -= f * b[col];
    }
  }
  for (std::size_t r = 0; r < n; ++r) b[r] /= a[r][r];
  return b;
}

// (P^T - I) pi = 0 with the last equation replaced by sum(pi) = 1.
std::vector<Rational> stationary_vector(const RationalMatrix& p) {
  const std::size_t n = p.size();
  if (n == 0) return {};
  RationalMatrix a(n, std::vector<Rational>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r][c] = p[c][r] - (r == c ? 1 : 0);
  std::vector<Rational> b(n, 0);
  for (std::size_t c = 0; c < n; ++c) a[n - 1][c] = 1;
  b[n - 1] = 1;
  return solve(std::move(a), std::move(b));
}

}  // namespace altab
