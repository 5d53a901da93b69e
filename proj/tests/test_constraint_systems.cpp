#include <random>

#include <gtest/gtest.h>

#include "arrangeval/chains.hpp"
#include "arrangeval/constraints.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

std::size_t count_kind(const std::vector<ConstraintRow>& rows, RowKind kind) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.kind == kind ? 1 : 0;
  return n;
}

TEST(ReciprocitySystem, Examples) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  const auto rows = reciprocity_system(g, 2);
  EXPECT_EQ(rows.size(), 4u);
  for (const auto& r : rows) {
    EXPECT_EQ(r.coefficients.size(), 2u);
    for (const auto& [j, v] : r.coefficients) EXPECT_EQ(v, Rational(1));
  }
  const ArrangementComplex t = ArrangementComplex::build(tri());
  const auto tr = reciprocity_system(t, 2);
  ASSERT_EQ(tr.size(), 1u);
  EXPECT_EQ(tr[0].coefficients.size(), 3u);
  EXPECT_TRUE(reciprocity_system(g, 1).empty());
  EXPECT_TRUE(reciprocity_system(g, 0).empty());
}

TEST(PeriodSystem, Examples) {
  const ArrangementComplex c = ArrangementComplex::build(one_dim(3));
  const auto rows = period_system(c, 1);
  ASSERT_EQ(rows.size(), 1u);
  ASSERT_EQ(rows[0].coefficients.size(), 3u);
  const Rational first = rows[0].coefficients[0].second;
  EXPECT_TRUE(first == 1 || first == -1);
  for (const auto& [j, v] : rows[0].coefficients) EXPECT_EQ(v, first);

  const ArrangementComplex g = ArrangementComplex::build(grid());
  const auto g2 = period_system(g, 2);
  EXPECT_EQ(g2.size(), 4u);
  for (const auto& r : g2) EXPECT_EQ(r.coefficients.size(), 2u);
  const auto g1 = period_system(g, 1);
  ASSERT_EQ(g1.size(), 2u);
  for (const auto& r : g1) EXPECT_EQ(r.coefficients.size(), 2u);
}

TEST(PeriodSystem, RowsPerAnchorEqualAnchorDimension) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 6; ++t) {
    const ArrangementComplex c = ArrangementComplex::build(random_toric(rng, 2 + t % 2, 4));
    for (std::size_t k = 1; k <= c.n(); ++k) {
      std::map<Flag, std::size_t> per_anchor;
      for (const auto& r : period_system(c, k)) ++per_anchor[r.anchor];
      for (const auto& [anchor, count] : per_anchor) EXPECT_EQ(count, c.flat(anchor.back()).dim());
    }
  }
}

TEST(SolutionSpace, Examples) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  EXPECT_EQ(g.layout(2).flags.size(), 8u);
  EXPECT_EQ(solution_space(g, 2, true).dim(), 1u);
  const ArrangementComplex t = ArrangementComplex::build(tri());
  EXPECT_EQ(t.layout(2).flags.size(), 3u);
  EXPECT_EQ(solution_space(t, 2, true).dim(), 0u);
  EXPECT_EQ(solution_space(g, 0, true).dim(), 1u);
  EXPECT_EQ(solution_space(g, 0, false).dim(), 1u);
}

TEST(VerifyDescriptions, ToricFixtures) {
  for (const auto& a : {one_dim(2), one_dim(3), one_dim(5), grid(), tri(), mixed3()}) {
    const VerificationReport r = verify_descriptions(ArrangementComplex::build(a), VerifyMode::Toric);
    EXPECT_TRUE(r.ok()) << describe(a);
  }
  for (std::size_t n = 2; n <= 6; ++n) {
    const ArrangementComplex c = ArrangementComplex::build(one_dim(n));
    EXPECT_EQ(solution_space(c, 1, true).dim(), n - 1);
  }
}

TEST(VerifyDescriptions, RandomToric) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 8; ++t) {
    const Arrangement a = random_toric(rng, 1 + t % 3, 3 + t % 4);
    EXPECT_TRUE(verify_descriptions(ArrangementComplex::build(a), VerifyMode::Toric).ok()) << describe(a);
  }
}

TEST(VerifyDescriptions, AffineTriangle) {
  const ArrangementComplex c = ArrangementComplex::build(aff_tri(), true);
  const VerificationReport p = verify_descriptions(c, VerifyMode::Pseudoaffine);
  EXPECT_TRUE(p.ok());
  EXPECT_FALSE(p.bounded_dim.has_value());
  const VerificationReport r = verify_descriptions(c, VerifyMode::AffineCompact);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.bounded_dim, std::optional<std::size_t>(1));
  std::set<std::string> names;
  for (const auto& ch : r.checks) names.insert(ch.name);
  EXPECT_EQ(names, (std::set<std::string>{"reciprocity", "first:reciprocity+periods", "second:finite-reciprocity",
                                          "bounded:reciprocity+periods", "bounded-in-reciprocity"}));
  EXPECT_THROW(verify_descriptions(ArrangementComplex::build(aff_tri()), VerifyMode::Pseudoaffine),
               std::invalid_argument);
  EXPECT_THROW(verify_descriptions(c, VerifyMode::Toric), std::invalid_argument);
}

TEST(ConstraintRows, SatisfiedByEveryQuotientElement) {
  std::mt19937_64 rng(43);
  std::vector<Arrangement> as = {grid(), tri(), mixed3()};
  for (int t = 0; t < 4; ++t) as.push_back(random_toric(rng, 2 + t % 2, 4));
  for (const auto& a : as) {
    const ArrangementComplex c = ArrangementComplex::build(a);
    const FiltrationReport r = degree_filtration(c);
    for (std::size_t k = 0; k <= c.n(); ++k) {
      auto rows = reciprocity_system(c, k);
      const auto periods = period_system(c, k);
      rows.insert(rows.end(), periods.begin(), periods.end());
      const Matrix m = constraint_matrix(rows, c.layout(k).flags.size());
      for (std::size_t i = 0; i < r.quotients[k].dim(); ++i) {
        EXPECT_TRUE(is_zero(m * r.quotients[k].basis_vector(i))) << describe(a) << " k=" << k;
      }
      EXPECT_EQ(count_kind(rows, RowKind::Period), periods.size());
    }
  }
}

TEST(CocycleCheck, EmbeddedAndCoboundaries) {
  std::mt19937_64 rng(44);
  for (const auto& a : {grid(), tri(), mixed3()}) {
    const ArrangementComplex c = ArrangementComplex::build(a);
    for (std::size_t k = 1; k <= c.n(); ++k) {
      EXPECT_TRUE(cocycle_check(c, flag_embed(c, {k, random_vec(rng, c.layout(k).flags.size())})));
      EXPECT_TRUE(cocycle_check(c, leray_D(c, {k - 1, random_vec(rng, c.layout(k - 1).size())})));
    }
  }
}

TEST(CocycleCheck, BrokenJumpFails) {
  const ArrangementComplex c = ArrangementComplex::build(grid());
  Vec quarter(4);
  quarter[c.locate(0, {ratio(1, 4), ratio(1, 4)}, {})] = 1;
  ElementaryChain x = leray_D(c, {0, quarter});
  ASSERT_TRUE(cocycle_check(c, x));
  for (auto& v : x.values) {
    if (v != 0) {
      v = 0;
      break;
    }
  }
  EXPECT_FALSE(cocycle_check(c, x));
}

TEST(SatisfiesReciprocity, TopImagesOfRandomChains) {
  std::mt19937_64 rng(45);
  const ArrangementComplex c = ArrangementComplex::build(mixed3());
  for (int t = 0; t < 10; ++t) {
    const ElementaryChain top = leray_power(c, random_vec(rng, c.top_cells()), 3);
    EXPECT_TRUE(satisfies_reciprocity(c, top, 1));
    EXPECT_TRUE(satisfies_reciprocity(c, top, 2));
  }
  const std::size_t flags = c.layout(2).flags.size();
  FlagFunction spike{2, Vec(flags)};
  spike.values[0] = 1;
  EXPECT_FALSE(satisfies_reciprocity(c, flag_embed(c, spike), 1));
}

}  // namespace
