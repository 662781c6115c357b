#pragma once

#include "kmw/linalg.hpp"

#include <optional>

namespace kmw {

/// Decides whether A x = b has a solution with x >= 0, exactly over the
/// rationals. Phase-one simplex with Bland's anti-cycling rule. On success
/// returns one feasible x.
std::optional<RationalVector> find_nonnegative_solution(const RatMatrix& a, const RationalVector& b);

}  // namespace kmw
