#include "kmw/linalg.hpp"

#include <utility>

namespace kmw {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    out[i].reserve(m[i].size());
    for (int v : m[i]) out[i].emplace_back(v);
  }
  return out;
}

namespace {

// Gauss-Jordan on an augmented n x (n + k) matrix. Returns false if singular.
bool reduce(RatMatrix& aug, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(aug[pivot], aug[col]);
    const Rational inv = 1 / aug[col][col];
    for (auto& v : aug[col]) v *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || aug[row][col] == 0) continue;
      const Rational f = aug[row][col];
      for (std::size_t j = col; j < aug[row].size(); ++j) aug[row][j] -= f * aug[col][j];
    }
  }
  return true;
}

}  // namespace

std::optional<RationalVector> solve(RatMatrix a, RationalVector b) {
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) a[i].push_back(b[i]);
  if (!reduce(a, n)) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& a) {
  const std::size_t n = a.size();
  RatMatrix aug(n);
  for (std::size_t i = 0; i < n; ++i) {
    aug[i] = a[i];
    aug[i].resize(2 * n);
    aug[i][n + i] = 1;
  }
  if (!reduce(aug, n)) return std::nullopt;
  RatMatrix inv(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

RationalVector multiply(const RatMatrix& a, const RationalVector& x) {
  RationalVector y(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

}  // namespace kmw
