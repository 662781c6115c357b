#include "kmw/simplex.hpp"

#include "kmw/error.hpp"

namespace kmw {

std::optional<RationalVector> find_nonnegative_solution(const RatMatrix& a, const RationalVector& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  if (rows == 0) return RationalVector(cols);

  // Tableau over [x | artificials | rhs]; artificials start basic.
  const std::size_t width = cols + rows + 1;
  RatMatrix t(rows, RationalVector(width));
  std::vector<std::size_t> basis(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < cols; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][cols + i] = 1;
    t[i][width - 1] = flip ? Rational(-b[i]) : b[i];
    basis[i] = cols + i;
  }

  // Reduced costs of the phase-one objective (sum of artificials).
  RationalVector cost(width);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < rows; ++i) cost[width - 1] -= t[i][width - 1];

  auto pivot = [&](std::size_t r, std::size_t c) {
    const Rational inv = 1 / t[r][c];
    for (auto& v : t[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || t[i][c] == 0) continue;
      const Rational f = t[i][c];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[r][j];
    }
    if (cost[c] != 0) {
      const Rational f = cost[c];
      for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[r][j];
    }
    basis[r] = c;
  };

  for (std::size_t iter = 0;; ++iter) {
    if (iter > 100000) throw Error(ErrorCode::Internal, "simplex failed to terminate");
    // Bland: lowest-index column with negative reduced cost enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    // Ratio test; ties broken by lowest basic variable index.
    std::size_t leave = rows;
    Rational best;
    for (std::size_t i = 0; i < rows; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave == rows) throw Error(ErrorCode::Internal, "phase-one objective unbounded");
    pivot(leave, enter);
  }

  // Optimal value is -cost[rhs]; feasible iff it is zero.
  if (cost[width - 1] != 0) return std::nullopt;
  RationalVector x(cols);
  for (std::size_t i = 0; i < rows; ++i)
    if (basis[i] < cols) x[basis[i]] = t[i][width - 1];
  return x;
}

}  // namespace kmw
