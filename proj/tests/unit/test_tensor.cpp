#include "kmw/error.hpp"
#include "kmw/tensor.hpp"

#include "oracles.hpp"
#include "properties.hpp"

#include <gtest/gtest.h>

using namespace kmw;

namespace {

CartanPtr type(const char* label) { return cartan_data(AffineType::parse(label)); }

oracle::CoordMap as_map(const Decomposition& dec) {
  oracle::CoordMap out;
  for (const auto& [c, m] : dec.entries())
    if (m != 0) out[c] = m;
  return out;
}

struct Case {
  const char* label;
  const char* lhs;
  const char* rhs;
  int depth;
};

const Case kCases[] = {
    {"A1~", "1,1;0", "1,1;0", 4}, {"A1~", "1,0;0", "1,0;0", 5},   {"A1~", "2,1;0", "0,3;0", 3},
    {"A2~", "1,1,1;0", "1,1,1;0", 2}, {"A2~", "1,0,0;0", "0,1,0;0", 3}, {"C2~", "1,1,1;0", "1,1,1;0", 1},
    {"C2~", "1,0,0;0", "0,0,1;0", 2}, {"G2~", "1,1,1;0", "1,1,1;0", 1}, {"B3~", "1,0,0,0;0", "1,0,0,0;0", 1},
};

}  // namespace

TEST(Tensor, PeelingMatchesBrauerKlimyk) {
  for (const auto& c : kCases) {
    const auto data = type(c.label);
    const Weight lam = parse_weight(data, c.lhs);
    const Weight mu = parse_weight(data, c.rhs);
    const auto dec = tensor_decompose(lam, mu, c.depth);
    const auto expected = oracle::brauer_klimyk(lam, mu, c.depth);
    EXPECT_EQ(as_map(dec), expected) << c.label << " " << c.lhs << " x " << c.rhs;
  }
}

TEST(Tensor, A1RhoSquaredLowGrades) {
  const auto data = type("A1~");
  const Weight r = rho(data);
  const auto dec = tensor_decompose(r, r, 2);
  const Weight delta = Weight::delta(data);
  EXPECT_EQ(dec.multiplicity(r * Rational(2)), 1);
  EXPECT_EQ(dec.multiplicity(parse_weight(data, "4,0;0")), 1);
  EXPECT_EQ(dec.multiplicity(parse_weight(data, "0,4;-1")), 1);
  EXPECT_EQ(dec.multiplicity(r * Rational(2) - delta), 2);
  EXPECT_EQ(dec.multiplicity(r * Rational(2) - delta * Rational(2)), 4);
  EXPECT_TRUE(dec.is_delta_maximal_component(r * Rational(2)));
  EXPECT_FALSE(dec.is_delta_maximal_component(r * Rational(2) - delta));
}

TEST(Tensor, Commutative) {
  const auto data = type("C2~");
  const Weight a = parse_weight(data, "1,0,1;0");
  const Weight b = parse_weight(data, "0,2,0;0");
  EXPECT_EQ(as_map(tensor_decompose(a, b, 1)), as_map(tensor_decompose(b, a, 1)));
}

TEST(Tensor, ConservationAtEveryGrade) {
  for (const auto& c : kCases) {
    const auto data = type(c.label);
    const auto dec = tensor_decompose(parse_weight(data, c.lhs), parse_weight(data, c.rhs), std::min(c.depth, 2));
    const auto outcome = props::peeling_conservation(dec);
    EXPECT_TRUE(outcome.ok()) << c.label << ": " << outcome.failures.front();
  }
}

TEST(Tensor, PrvWitnessesOccur) {
  for (const auto& c : kCases) {
    const auto data = type(c.label);
    const auto dec = tensor_decompose(parse_weight(data, c.lhs), parse_weight(data, c.rhs), c.depth);
    const auto outcome = props::prv_witnesses(dec, 17, 60);
    EXPECT_TRUE(outcome.ok()) << c.label << ": " << outcome.failures.front();
  }
}

TEST(Tensor, PrvRejectsNonDominantCombination) {
  const auto data = type("A1~");
  const Weight r = rho(data);
  // rho + s_1 s_0 rho = 6 Lambda_0 - 2 Lambda_1 - delta.
  EXPECT_FALSE(prv(r, r, {}, {1, 0}).has_value());
  EXPECT_EQ(prv(r, r, {}, {1}), Weight::fundamental(data, 0) * Rational(4));
  EXPECT_EQ(prv(r, r, {}, {}), r * Rational(2));
}

TEST(Tensor, DeltaShiftedFactors) {
  const auto data = type("A2~");
  const Weight r = rho(data);
  const Weight delta = Weight::delta(data);
  const auto plain = tensor_decompose(r, r, 1);
  const auto shifted = tensor_decompose(r - delta, r, 1);
  EXPECT_EQ(as_map(plain), as_map(shifted));
  EXPECT_EQ(shifted.multiplicity(r * Rational(2) - delta), 1);
}

TEST(Tensor, WindowPolicy) {
  const auto data = type("A1~");
  const Weight r = rho(data);
  const auto dec = tensor_decompose(r, r, 1);
  EXPECT_EQ(dec.multiplicity(r * Rational(2) + Weight::delta(data)), 0);
  EXPECT_EQ(dec.multiplicity(r), 0);
  try {
    dec.multiplicity(r * Rational(2) - Weight::delta(data) * Rational(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::OutOfWindow);
  }
}

TEST(Tensor, CacheDoesNotChangeResults) {
  const auto data = type("G2~");
  CharacterCache cache;
  const Weight r = rho(data);
  EXPECT_EQ(as_map(tensor_decompose(r, r, 1, &cache)), as_map(tensor_decompose(r, r, 1)));
  EXPECT_EQ(as_map(tensor_decompose(r, r, 1, &cache)), as_map(tensor_decompose(r, r, 1)));
  EXPECT_GT(cache.stats().memory_hits, 0u);
}

TEST(Tensor, ComponentsListIsGradeOrdered) {
  const auto data = type("A2~");
  const auto dec = tensor_decompose(rho(data), rho(data), 2);
  const auto comps = dec.components();
  ASSERT_FALSE(comps.empty());
  EXPECT_EQ(comps.front().nu, rho(data) * Rational(2));
  for (std::size_t i = 1; i < comps.size(); ++i) EXPECT_LE(comps[i - 1].grade, comps[i].grade);
  for (const auto& comp : comps) {
    EXPECT_GE(comp.mult, 1);
    EXPECT_TRUE(is_dominant(comp.nu));
  }
}
