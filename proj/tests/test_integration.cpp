#include <random>

#include <gtest/gtest.h>

#include "arrangeval/constraints.hpp"
#include "arrangeval/integration.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

std::vector<ArrangementComplex> toric_fixtures() {
  std::vector<ArrangementComplex> out;
  for (const auto& a : {one_dim(2), one_dim(3), grid(), tri(), mixed3()}) out.push_back(ArrangementComplex::build(a));
  std::mt19937_64 rng(51);
  for (int t = 0; t < 4; ++t) out.push_back(ArrangementComplex::build(random_toric(rng, 2 + t % 2, 4 + t % 2)));
  return out;
}

TEST(IntegrateStep, OneDimensionalJumps) {
  const ArrangementComplex c = ArrangementComplex::build(one_dim(2));
  const ElementaryChain eta = integrate_step(c, {1, {1, -1}});
  EXPECT_EQ(leray_D(c, eta).values, (Vec{1, -1}));
  EXPECT_EQ(eta.values[anchor_cell(c, 0, AnchorStrategy::LexMin)], Rational(0));
  Vec arc(2);
  arc[c.locate(0, {ratio(1, 4)}, {})] = 1;
  const Vec expected = eta.values[c.locate(0, {ratio(1, 4)}, {})] == 1 ? arc : add(arc, Vec(2, Rational(-1)));
  EXPECT_EQ(eta.values, expected);
}

TEST(IntegrateStep, ZeroIntegratesToZero) {
  for (const auto& c : toric_fixtures()) {
    for (std::size_t k = 1; k <= c.n(); ++k) {
      EXPECT_TRUE(is_zero(integrate_step(c, zero_chain(c, k)).values));
    }
  }
}

TEST(IntegrateStep, AnchorCellsVanish) {
  std::mt19937_64 rng(52);
  for (const auto& c : toric_fixtures()) {
    for (std::size_t k = 1; k <= c.n(); ++k) {
      const ElementaryChain x = leray_D(c, {k - 1, random_vec(rng, c.layout(k - 1).size())});
      const ElementaryChain eta = integrate_step(c, x);
      EXPECT_EQ(leray_D(c, eta).values, x.values);
      const FlagLayout& l = c.layout(k - 1);
      for (std::size_t b = 0; b < l.flags.size(); ++b) {
        const std::size_t base = l.flags[b].back();
        EXPECT_EQ(eta.values[l.offset[b] + anchor_cell(c, base, AnchorStrategy::LexMin)], Rational(0));
      }
    }
  }
}

TEST(IntegrateStep, TraversalOrderIrrelevant) {
  std::mt19937_64 rng(53);
  for (const auto& c : toric_fixtures()) {
    for (std::size_t k = 1; k <= c.n(); ++k) {
      const ElementaryChain x = leray_D(c, {k - 1, random_vec(rng, c.layout(k - 1).size())});
      const Vec plain = integrate_step(c, x).values;
      for (std::uint64_t s = 1; s <= 3; ++s) EXPECT_EQ(integrate_step(c, x, {AnchorStrategy::LexMin, s}).values, plain);
    }
  }
}

TEST(IntegrateStep, NonCoboundaryThrows) {
  const ArrangementComplex c = ArrangementComplex::build(one_dim(2));
  EXPECT_THROW(integrate_step(c, {1, {1, 0}}), IntegrationError);
}

TEST(ChainPeriods, CoboundariesHaveNoPeriods) {
  std::mt19937_64 rng(54);
  for (const auto& c : toric_fixtures()) {
    for (std::size_t k = 1; k <= c.n(); ++k) {
      const ElementaryChain x = leray_D(c, {k - 1, random_vec(rng, c.layout(k - 1).size())});
      for (std::size_t a = 0; a < c.layout(k - 1).flags.size(); ++a) EXPECT_TRUE(is_zero(chain_periods(c, x, a)));
    }
  }
}

TEST(LiftToChain, AgreesWithDirectSolve) {
  std::mt19937_64 rng(55);
  for (const auto& c : toric_fixtures()) {
    for (std::size_t k = 0; k <= c.n(); ++k) {
      const Subspace s = solution_space(c, k, true);
      for (std::size_t i = 0; i < s.dim(); ++i) {
        const FlagFunction f{k, s.basis_vector(i)};
        const Vec g = lift_to_chain(c, f, {AnchorStrategy::LexMin, rng()});
        const Vec h = lift_direct(c, f);
        EXPECT_EQ(leray_power(c, g, k).values, flag_embed(c, f).values);
        EXPECT_EQ(leray_power(c, h, k).values, flag_embed(c, f).values);
      }
    }
  }
}

TEST(LiftToChain, OutsideImageThrows) {
  const ArrangementComplex t = ArrangementComplex::build(tri());
  FlagFunction f{2, Vec(t.layout(2).flags.size())};
  f.values[0] = 1;
  EXPECT_THROW(lift_to_chain(t, f), InfeasibleLift);
  EXPECT_THROW(lift_direct(t, f), InfeasibleLift);
  const ArrangementComplex a = ArrangementComplex::build(aff_tri());
  EXPECT_THROW(lift_to_chain(a, {0, {1}}), std::invalid_argument);
}

}  // namespace
