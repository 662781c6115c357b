#include "kmw/simplex.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace kmw;

namespace {

RationalVector times(const RatMatrix& a, const RationalVector& x) {
  RationalVector out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i] += a[i][j] * x[j];
  return out;
}

}  // namespace

TEST(Simplex, FindsAFeasiblePoint) {
  const RatMatrix a{{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)}};
  const RationalVector b{Rational(1), Rational(1, 2)};
  const auto x = find_nonnegative_solution(a, b);
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(times(a, *x) == b);
  for (const auto& v : *x) EXPECT_GE(v, 0);
}

TEST(Simplex, DetectsInfeasibility) {
  const RatMatrix a{{Rational(1), Rational(2)}};
  EXPECT_FALSE(find_nonnegative_solution(a, {Rational(-1)}).has_value());
  const RatMatrix b{{Rational(1), Rational(1)}, {Rational(1), Rational(1)}};
  EXPECT_FALSE(find_nonnegative_solution(b, {Rational(1), Rational(2)}).has_value());
}

TEST(Simplex, HandlesNegativeRightHandSides) {
  const RatMatrix a{{Rational(-1), Rational(1)}};
  const auto x = find_nonnegative_solution(a, {Rational(-3, 2)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(times(a, *x)[0], Rational(-3, 2));
}

TEST(Simplex, DegenerateSystemsTerminate) {
  // Many redundant rows and a zero right-hand side.
  RatMatrix a(6, RationalVector(4, 0));
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = Rational((i + j) % 3 - 1);
  const auto x = find_nonnegative_solution(a, RationalVector(6, 0));
  ASSERT_TRUE(x.has_value());
  EXPECT_TRUE(times(a, *x) == RationalVector(6, 0));
}

TEST(Simplex, RandomFeasibleSystemsAreSolved) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coeff(-4, 4), value(0, 5);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + t % 4, cols = 1 + t % 7;
    RatMatrix a(rows, RationalVector(cols));
    RationalVector x0(cols);
    for (auto& row : a)
      for (auto& v : row) v = coeff(rng);
    for (auto& v : x0) v = Rational(value(rng), 1 + value(rng));
    for (auto& v : x0) v.canonicalize();
    const RationalVector b = times(a, x0);
    const auto x = find_nonnegative_solution(a, b);
    ASSERT_TRUE(x.has_value()) << "trial " << t;
    EXPECT_TRUE(times(a, *x) == b);
    for (const auto& v : *x) EXPECT_GE(v, 0);
  }
}

TEST(Simplex, SignPatternInfeasibility) {
  // Nonnegative matrix with a negative target is never feasible.
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coeff(0, 3);
  for (int t = 0; t < 100; ++t) {
    RatMatrix a(3, RationalVector(5));
    for (auto& row : a)
      for (auto& v : row) v = coeff(rng);
    RationalVector b{Rational(1), Rational(-1, 3), Rational(2)};
    EXPECT_FALSE(find_nonnegative_solution(a, b).has_value());
  }
}
