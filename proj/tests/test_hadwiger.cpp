#include <random>

#include <gtest/gtest.h>

#include "arrangeval/hadwiger.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

Polytope box(const Vec& lo, const Vec& hi) {
  return Polytope::from_vertices({{lo[0], lo[1]}, {hi[0], lo[1]}, {hi[0], hi[1]}, {lo[0], hi[1]}});
}

Polytope segment(const Rational& a, const Rational& b) { return Polytope::from_vertices({{a}, {b}}); }

Flag flag_of(const ArrangementComplex& c, const std::vector<std::string>& ids) {
  Flag f{0};
  for (const auto& id : ids) f.push_back(*c.poset().find(id));
  return f;
}

// Random grid-aligned box with half-integer corners.
Polytope random_box(std::mt19937_64& rng) {
  auto half = [&](long lo, long hi) { return ratio(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)), 2); };
  const Rational x = half(-4, 4), y = half(-4, 4);
  return box({x, y}, {x + half(1, 4), y + half(1, 4)});
}

TEST(HadwigerEval, Examples) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  EXPECT_EQ(hadwiger_eval(g, {{0}, 1}, box({0, 0}, {ratio(1, 2), ratio(1, 2)})), ratio(1, 4));
  const ArrangementComplex c = ArrangementComplex::build(one_dim(2));
  const Flag at_zero = flag_of(c, {"T[(1)=0]"});
  EXPECT_EQ(hadwiger_eval(c, {at_zero, 1}, segment(ratio(-1, 2), 0)), Rational(-1));
  EXPECT_EQ(hadwiger_eval(c, {at_zero, -1}, segment(ratio(-1, 2), 0)), Rational(1));
  EXPECT_EQ(hadwiger_eval(c, {flag_of(c, {"T[(1)=1/2]"}), 1}, segment(ratio(-1, 2), 0)), Rational(1));
  EXPECT_EQ(hadwiger_eval(c, {{0}, 1}, segment(ratio(-1, 2), 0)), ratio(1, 2));
}

TEST(HadwigerEval, FlagsOutsideThePolytopeVanish) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  const Polytope p = box({0, 0}, {ratio(1, 2), ratio(1, 2)});
  const Flag vertical = flag_of(g, {"T[(1,0)=0]"});
  EXPECT_NE(hadwiger_eval(g, {vertical, 1}, p), Rational(0));
  EXPECT_TRUE(flag_of_polytope(g, p, vertical).has_value());
  const Flag far = flag_of(g, {"T[(1,0)=0]", "T[(1,0)=0;(0,1)=1/2]"});
  EXPECT_TRUE(flag_of_polytope(g, p, far).has_value());
  EXPECT_EQ(abs(hadwiger_eval(g, {far, 1}, p)), Rational(1));
}

TEST(HadwigerVector, TwoPathsAgree) {
  std::mt19937_64 rng(61);
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (int t = 0; t < 20; ++t) {
    const Polytope p = random_box(rng);
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(hadwiger_vector(g, p, k), hadwiger_vector_via_leray(g, p, k));
  }
  const ArrangementComplex tr = ArrangementComplex::build(tri());
  for (int t = 0; t < 10; ++t) {
    const Rational a = Rational(static_cast<long>(rng() % 5) - 2), b = Rational(static_cast<long>(rng() % 5) - 2);
    const Rational s = Rational(static_cast<long>(1 + rng() % 3));
    const Polytope p = Polytope::from_vertices({{a, b}, {a + s, b}, {a + s, b + s}});
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(hadwiger_vector(tr, p, k), hadwiger_vector_via_leray(tr, p, k));
  }
}

TEST(HadwigerVector, TranslationAndAdditivity) {
  std::mt19937_64 rng(62);
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (int t = 0; t < 20; ++t) {
    const Polytope p = random_box(rng);
    const Vec shift = random_vec(rng, 2);
    const Vec lo = p.vertices().front(), hi = p.vertices().back();
    const Rational cut = lo[0] + ratio(1, 2);
    for (std::size_t k = 0; k <= 2; ++k) {
      EXPECT_EQ(hadwiger_vector(g, p, k), hadwiger_vector(g, p.translated(shift), k));
    }
    if (cut >= hi[0]) continue;
    // Υ_k on a full-dimensional dissection: pieces sum to the whole in rank 0.
    const Vec left = hadwiger_vector(g, box(lo, {cut, hi[1]}), 0);
    const Vec right = hadwiger_vector(g, box({cut, lo[1]}, hi), 0);
    EXPECT_EQ(add(left, right), hadwiger_vector(g, p, 0));
  }
}

TEST(HadwigerFunctionals, AgreeWithIndicatorChains) {
  std::mt19937_64 rng(63);
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (int t = 0; t < 10; ++t) {
    const Polytope p = random_box(rng);
    const Vec chi = indicator_chain(g, p);
    for (std::size_t k = 0; k <= 2; ++k) EXPECT_EQ(hadwiger_functionals(g, k) * chi, hadwiger_vector(g, p, k));
  }
}

TEST(OneFlagChain, SignedUnitVector) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (std::size_t k = 0; k <= 2; ++k) {
    for (std::size_t i = 0; i < g.layout(k).flags.size(); ++i) {
      const FlagFunction up = one_flag_chain(g, {g.layout(k).flags[i], 1});
      const FlagFunction down = one_flag_chain(g, {g.layout(k).flags[i], -1});
      Vec unit(g.layout(k).flags.size());
      unit[i] = 1;
      EXPECT_EQ(up.values, unit);
      EXPECT_EQ(down.values, scale(unit, Rational(-1)));
    }
  }
}

TEST(ValuationDecompose, ReconstructsFunctionals) {
  std::mt19937_64 rng(64);
  for (const auto& a : {one_dim(3), grid(), tri(), mixed3()}) {
    const ArrangementComplex c = ArrangementComplex::build(a);
    const FiltrationReport r = degree_filtration(c);
    for (int t = 0; t < 5; ++t) {
      const Vec mu = random_vec(rng, c.top_cells());
      const DecompositionTable table = valuation_decompose(c, mu, r);
      ASSERT_EQ(table.coefficients.size(), c.n() + 1);
      for (std::size_t k = 0; k <= c.n(); ++k) EXPECT_EQ(table.coefficients[k].size(), c.layout(k).flags.size());
      EXPECT_EQ(reconstruct(c, table), mu) << describe(a);
    }
  }
}

TEST(ValuationDecompose, VolumeIsRankZero) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  const DecompositionTable table = valuation_decompose(g, Vec(4, ratio(1, 4)));
  EXPECT_EQ(table.coefficients[0], (Vec{1}));
  EXPECT_TRUE(is_zero(table.coefficients[1]));
  EXPECT_TRUE(is_zero(table.coefficients[2]));
}

TEST(InducedLabelMap, IdentityAndShift) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (std::size_t k = 0; k <= 2; ++k) {
    for (const auto& f : g.layout(k).flags) {
      const HadwigerLabel image = induced_label_map(g, g, {0, 1, 2, 3}, {f, 1});
      EXPECT_EQ(image.flag, f);
      EXPECT_EQ(image.orientation, 1);
    }
  }
  const std::vector<std::size_t> shift = {2, 1, 0, 3};
  const HadwigerLabel moved = induced_label_map(g, g, shift, {flag_of(g, {"T[(1,0)=0]"}), 1});
  EXPECT_EQ(moved.flag, flag_of(g, {"T[(1,0)=1/2]"}));
  EXPECT_EQ(induced_flat_map(g, g, shift, *g.poset().find("T[(1,0)=0;(0,1)=1/2]")),
            *g.poset().find("T[(1,0)=1/2;(0,1)=1/2]"));

  const ArrangementComplex t = ArrangementComplex::build(tri());
  EXPECT_THROW(induced_flat_map(t, g, {1, 0, 2}, *t.poset().find("T[(1,0)=0]")), std::invalid_argument);
}

}  // namespace
