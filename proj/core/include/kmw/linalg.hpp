#pragma once

#include "kmw/rational.hpp"

#include <optional>
#include <vector>

namespace kmw {

using IntMatrix = std::vector<std::vector<int>>;
using RatMatrix = std::vector<std::vector<Rational>>;

RatMatrix to_rational(const IntMatrix& m);

/// Solves the square system A x = b exactly. Returns nullopt when A is singular.
std::optional<RationalVector> solve(RatMatrix a, RationalVector b);

/// Exact inverse of a square matrix; nullopt when singular.
std::optional<RatMatrix> inverse(const RatMatrix& a);

RationalVector multiply(const RatMatrix& a, const RationalVector& x);

}  // namespace kmw
