#include "kmw/error.hpp"
#include "kmw/weyl.hpp"

#include "properties.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace kmw;

namespace {

CartanPtr type(const char* label) { return cartan_data(AffineType::parse(label)); }

}  // namespace

TEST(Weyl, ReflectionsAreIsometricInvolutions) {
  for (const char* label : {"A1~", "A3~", "B3~", "C2~", "G2~"}) {
    const auto outcome = props::reflection_isometry(type(label), 7, 50);
    EXPECT_TRUE(outcome.ok()) << label << ": " << outcome.failures.front();
  }
}

TEST(Weyl, ReflectionOfSimpleRootNegatesIt) {
  const auto data = type("G2~");
  for (int i = 0; i < data->size(); ++i)
    EXPECT_EQ(reflect(i, Weight::simple_root(data, i)), -Weight::simple_root(data, i));
}

TEST(Weyl, ApplyWordActsRightToLeft) {
  const auto data = type("A2~");
  const Weight w = Weight::fundamental(data, 1);
  EXPECT_EQ(apply_word({0, 1}, w), reflect(0, reflect(1, w)));
}

TEST(Weyl, ToDominantReconstructsInput) {
  const auto data = type("C2~");
  props::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    Weight w = props::random_integral_weight(data, rng, 6);
    if (level(w) <= 0) continue;
    const DominantForm d = to_dominant(w);
    EXPECT_TRUE(is_dominant(d.weight));
    EXPECT_EQ(apply_word(d.word, d.weight), w);
    EXPECT_EQ(bilinear(d.weight, d.weight), bilinear(w, w));
  }
}

TEST(Weyl, ToDominantNeedsPositiveLevel) {
  const auto data = type("A1~");
  try {
    to_dominant(parse_weight(data, "1,-1;0"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PositiveLevelRequired);
  }
  // A dominant input needs no steps, whatever its level.
  EXPECT_TRUE(to_dominant(Weight::zero(data)).word.empty());
}

TEST(Weyl, ParabolicOrbitSizesMatchGroupOrders) {
  // |W_J| for the finite Weyl group of the full finite subdiagram.
  struct Case {
    const char* label;
    const char* nodes;
    std::size_t order;
  };
  for (const auto& c : {Case{"A1~", "1", 2}, Case{"A2~", "1,2", 6}, Case{"C2~", "1,2", 8}, Case{"G2~", "1,2", 12},
                        Case{"B3~", "1,2,3", 48}, Case{"A3~", "0,2", 4}, Case{"F4~", "1,2,3,4", 1152}}) {
    const auto data = type(c.label);
    EXPECT_EQ(parabolic_orbit(ParabolicSubset::parse(c.nodes), rho(data)).size(), c.order) << c.label;
  }
}

TEST(Weyl, FullAffineGroupIsRejected) {
  const auto data = type("A1~");
  try {
    parabolic_orbit(ParabolicSubset::parse("0,1"), rho(data));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfiniteGroup);
  }
}

TEST(Weyl, ParabolicSubsetEnumeration) {
  const auto all = ParabolicSubset::all_proper(3);
  EXPECT_EQ(all.size(), 7u);
  EXPECT_TRUE(all.front().empty());
  EXPECT_EQ(ParabolicSubset::parse("2,0").to_string(), "0,2");
  EXPECT_TRUE(ParabolicSubset::parse("0,2").is_proper(3));
  EXPECT_FALSE(ParabolicSubset::parse("0,1,2").is_proper(3));
}

TEST(Weyl, VertexFormulasAgreeA1) {
  const auto data = type("A1~");
  const Weight two_rho = rho(data) * Rational(2);
  EXPECT_EQ(vertex_candidate(ParabolicSubset(std::vector<int>{}), two_rho), two_rho);
  EXPECT_EQ(vertex_candidate(ParabolicSubset(std::vector<int>{0}), two_rho), parse_weight(data, "0,4;-1"));
  EXPECT_EQ(vertex_candidate(ParabolicSubset(std::vector<int>{1}), two_rho), parse_weight(data, "4,0;0"));
}

TEST(Weyl, VertexFormulasAgreeEverywhere) {
  for (const auto& t : admissible_types(3)) {
    const auto data = cartan_data(t);
    const Weight two_rho = rho(data) * Rational(2);
    std::set<Weight> seen;
    for (const auto& j : ParabolicSubset::all_proper(data->size())) {
      const Weight a = vertex_candidate(j, two_rho);
      EXPECT_EQ(a, vertex_candidate_by_solve(j, two_rho)) << t.label() << " J=" << j.to_string();
      EXPECT_EQ(a, rho_plus_longest(j, data)) << t.label() << " J=" << j.to_string();
      EXPECT_EQ(a, rho_plus_longest_by_roots(j, data)) << t.label() << " J=" << j.to_string();
      seen.insert(a);
    }
    EXPECT_EQ(seen.size(), ParabolicSubset::all_proper(data->size()).size()) << t.label();
  }
}

TEST(Weyl, SolveFormulaOnNonRegularWeight) {
  // For J containing a node where lam vanishes the solve still gives the average.
  const auto data = type("A2~");
  const Weight lam = parse_weight(data, "2,0,1;0");
  for (const auto& j : ParabolicSubset::all_proper(3)) {
    EXPECT_EQ(vertex_candidate(j, lam), vertex_candidate_by_solve(j, lam)) << j.to_string();
  }
}
