#include <random>

#include <gtest/gtest.h>

#include "arrangeval/chains.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

Polytope box(const Vec& lo, const Vec& hi) {
  return Polytope::from_vertices({{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}});
}

std::vector<ArrangementComplex> fixtures() {
  std::vector<ArrangementComplex> out;
  for (const auto& a : {one_dim(2), one_dim(3), grid(), tri(), mixed3()}) out.push_back(ArrangementComplex::build(a));
  out.push_back(ArrangementComplex::build(aff_tri()));
  out.push_back(ArrangementComplex::build(aff_tri(), true));
  return out;
}

TEST(IndicatorChain, GridExamples) {
  const ArrangementComplex c = ArrangementComplex::build(grid());
  Vec quarter(4);
  quarter[c.locate(0, {ratio(1, 4), ratio(1, 4)}, {})] = 1;
  EXPECT_EQ(indicator_chain(c, box({0, 0}, {ratio(1, 2), ratio(1, 2)})), quarter);
  EXPECT_EQ(indicator_chain(c, box({0, 0}, {1, 1})), Vec(4, Rational(1)));
  EXPECT_EQ(indicator_chain(c, box({-1, 0}, {1, 1})), Vec(4, Rational(2)));
  EXPECT_EQ(indicator_chain(c, Polytope{}), Vec(4));
  EXPECT_THROW(indicator_chain(c, box({0, 0}, {ratio(1, 3), 1})), std::invalid_argument);
}

TEST(LerayD, OneDimensionalArc) {
  const ArrangementComplex c = ArrangementComplex::build(one_dim(2));
  Vec arc(2);
  arc[c.locate(0, {ratio(1, 4)}, {})] = 1;
  const ElementaryChain d = leray_D(c, {0, arc});
  EXPECT_EQ(d.values, (Vec{1, -1}));
}

TEST(LerayD, ConstantsHaveNoJumps) {
  for (const auto& c : fixtures()) {
    EXPECT_TRUE(is_zero(leray_D(c, {0, Vec(c.top_cells(), Rational(1))}).values));
  }
}

TEST(LerayD, GridCellHitsFourWalls) {
  const ArrangementComplex c = ArrangementComplex::build(grid());
  Vec quarter(4);
  quarter[c.locate(0, {ratio(1, 4), ratio(1, 4)}, {})] = 1;
  const Vec d = leray_D(c, {0, quarter}).values;
  std::size_t nonzero = 0;
  for (const auto& x : d) {
    if (x == 0) continue;
    ++nonzero;
    EXPECT_TRUE(x == 1 || x == -1);
  }
  EXPECT_EQ(nonzero, 4u);
}

TEST(LerayD, TopPowerIsFlagConstant) {
  std::mt19937_64 rng(31);
  for (const auto& c : fixtures()) {
    for (int t = 0; t < 5; ++t) {
      const ElementaryChain top = leray_power(c, random_vec(rng, c.top_cells()), c.n());
      EXPECT_TRUE(flag_values(c, top).has_value());
    }
  }
}

TEST(FlagEmbed, LiesInKernel) {
  for (const auto& c : fixtures()) {
    for (std::size_t k = 0; k < c.n(); ++k) {
      const std::size_t flags = c.layout(k).flags.size();
      for (std::size_t i = 0; i < flags; ++i) {
        FlagFunction f{k, Vec(flags)};
        f.values[i] = 1;
        const ElementaryChain x = flag_embed(c, f);
        EXPECT_TRUE(is_zero(leray_D(c, x).values));
        EXPECT_EQ(flag_values(c, x)->values, f.values);
      }
    }
  }
  const ArrangementComplex g = ArrangementComplex::build(grid());
  EXPECT_TRUE(is_zero(flag_embed(g, {1, Vec(4)}).values));
}

TEST(IotaRegroup, RoundTrip) {
  std::mt19937_64 rng(32);
  for (const auto& c : fixtures()) {
    for (std::size_t l = 1; l <= c.n(); ++l) {
      const Vec x = random_vec(rng, c.layout(l).size());
      EXPECT_EQ(iota_regroup(c, l, iota_regroup(c, l, x, Regroup::Forward), Regroup::Backward), x);
      EXPECT_EQ(iota_regroup(c, l, iota_regroup(c, l, x, Regroup::Backward), Regroup::Forward), x);
    }
  }
}

TEST(DegreeFiltration, FixtureDims) {
  EXPECT_EQ(degree_filtration(ArrangementComplex::build(grid())).dims, (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(degree_filtration(ArrangementComplex::build(tri())).dims, (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(degree_filtration(ArrangementComplex::build(one_dim(3))).dims, (std::vector<std::size_t>{1, 2}));
}

TEST(DegreeFiltration, Invariants) {
  std::mt19937_64 rng(33);
  std::vector<ArrangementComplex> cs = fixtures();
  for (int t = 0; t < 6; ++t) cs.push_back(ArrangementComplex::build(random_toric(rng, 2 + t % 2, 4 + t % 3)));
  for (const auto& c : cs) {
    const FiltrationReport r = degree_filtration(c);
    std::size_t total = 0;
    for (std::size_t k = 0; k <= c.n(); ++k) {
      total += r.dims[k];
      EXPECT_EQ(r.quotients[k].dim(), r.dims[k]);
      EXPECT_EQ(r.lower[k].dim(), r.dims_le[k]);
      if (k > 0) EXPECT_TRUE(r.lower[k].contains(r.lower[k - 1]));
      for (std::size_t i = 0; i < r.quotient_lifts[k].size(); ++i) {
        const ElementaryChain img = leray_power(c, r.quotient_lifts[k][i], k);
        EXPECT_EQ(flag_values(c, img)->values, r.quotient_images[k][i]);
      }
    }
    EXPECT_EQ(total, c.top_cells());
    EXPECT_EQ(r.dim_v, c.top_cells());
    EXPECT_TRUE(subspace_equal(r.lower[0], Subspace::span(c.top_cells(), {Vec(c.top_cells(), Rational(1))})));
    EXPECT_EQ(r.dims_le[c.n()], c.top_cells());
  }
}

TEST(DegreeFiltration, LowerKernelsAnnihilatedByPowers) {
  const ArrangementComplex c = ArrangementComplex::build(mixed3());
  const FiltrationReport r = degree_filtration(c);
  for (std::size_t k = 0; k < c.n(); ++k) {
    for (std::size_t i = 0; i < r.lower[k].dim(); ++i) {
      EXPECT_TRUE(is_zero(leray_power(c, r.lower[k].basis_vector(i), k + 1).values));
    }
  }
}

}  // namespace
