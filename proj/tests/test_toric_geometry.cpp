#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "arrangeval/complex.hpp"
#include "arrangeval/toric.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

std::size_t count_codim(const FlatPoset& p, std::size_t codim) {
  return static_cast<std::size_t>(
      std::count_if(p.flats.begin(), p.flats.end(), [&](const Flat& f) { return f.codim == codim; }));
}

TEST(MakeToric, ReducesOffsets) {
  const Arrangement a = make_toric(1, {hp({1}, ratio(5, 4)), hp({1}, ratio(-1, 3))});
  EXPECT_EQ(a.hyperplanes[0].offset, ratio(1, 4));
  EXPECT_EQ(a.hyperplanes[1].offset, ratio(2, 3));
}

TEST(ValidateToric, Examples) {
  EXPECT_TRUE(validate_toric(grid()).valid);
  EXPECT_TRUE(validate_toric(tri()).valid);
  EXPECT_FALSE(validate_toric(make_toric(2, {hp({1, 0}, 0)})).valid);
  EXPECT_FALSE(validate_toric(make_toric(2, {hp({2, 0}, 0), hp({0, 1}, 0)})).valid);
  EXPECT_FALSE(validate_toric(make_toric(2, {hp({1, 0}, 0), hp({1, 0}, 1), hp({0, 1}, 0)})).valid);
}

TEST(ToricFlats, DisconnectedIntersection) {
  const FlatPoset p = toric_flats(make_toric(2, {hp({1, 1}, 0), hp({1, -1}, 0)}));
  EXPECT_EQ(count_codim(p, 2), 2u);
  std::set<Vec> points;
  for (const auto& f : p.flats) {
    if (f.codim != 2) continue;
    Vec x = f.base_point;
    for (auto& e : x) e = frac_of(e);
    points.insert(x);
  }
  EXPECT_EQ(points, (std::set<Vec>{{0, 0}, {ratio(1, 2), ratio(1, 2)}}));
}

TEST(ToricFlats, FixtureCounts) {
  EXPECT_EQ(toric_flats(tri()).flats.size(), 5u);
  const FlatPoset g = toric_flats(grid());
  EXPECT_EQ(g.flats.size(), 9u);
  EXPECT_EQ(count_codim(g, 1), 4u);
  EXPECT_EQ(count_codim(g, 2), 4u);
}

// Components of {A·x ≡ c} number the product of the nonzero elementary divisors.
TEST(ToricFlats, ComponentCountsMatchSmith) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 20; ++t) {
    const Arrangement a = random_toric(rng, 2, 2 + rng() % 3);
    const FlatPoset p = toric_flats(a);
    for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
      for (std::size_t j = i + 1; j < a.hyperplanes.size(); ++j) {
        const IntMatrix m = IntMatrix::from_rows({a.hyperplanes[i].normal, a.hyperplanes[j].normal}, 2);
        const Integer det = abs(determinant(m));
        if (det == 0) continue;
        std::size_t count = 0;
        for (const auto& f : p.flats) {
          if (f.codim != 2) continue;
          const auto& hs = f.hyperplanes;
          if (std::find(hs.begin(), hs.end(), i) != hs.end() && std::find(hs.begin(), hs.end(), j) != hs.end()) {
            ++count;
          }
        }
        EXPECT_EQ(Integer(static_cast<long>(count)), det) << describe(a);
      }
    }
  }
}

TEST(RestrictToFlat, Examples) {
  const FlatPoset t = toric_flats(tri());
  const Arrangement circle = restrict_to_flat(t, *t.find("T[(1,0)=0]"));
  EXPECT_EQ(circle.n, 1u);
  EXPECT_EQ(circle.hyperplanes.size(), 1u);
  const FlatPoset g = toric_flats(grid());
  const Arrangement c2 = restrict_to_flat(g, *g.find("T[(1,0)=0]"));
  EXPECT_EQ(c2.hyperplanes.size(), 2u);
  EXPECT_EQ(restrict_to_flat(g, 0).hyperplanes.size(), 4u);
  EXPECT_THROW(restrict_to_flat(g, *g.find("T[(1,0)=0;(0,1)=0]")), std::invalid_argument);
}

TEST(ToricCells, FixtureCounts) {
  EXPECT_EQ(ArrangementComplex::build(grid()).top_cells(), 4u);
  EXPECT_EQ(ArrangementComplex::build(tri()).top_cells(), 2u);
  EXPECT_EQ(ArrangementComplex::build(one_dim(3)).top_cells(), 3u);
  const ArrangementComplex g = ArrangementComplex::build(grid());
  for (const auto& cell : g.cells(0)) EXPECT_EQ(cell.volume, ratio(1, 4));
}

// Each flat of positive dimension is a torus: Σ over its subflats of (−1)^dim · #cells = 0.
TEST(ToricCells, EulerCharacteristicVanishes) {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 12; ++t) {
    const Arrangement a = random_toric(rng, 2 + rng() % 2, 3 + rng() % 3);
    const ArrangementComplex c = ArrangementComplex::build(a);
    for (std::size_t f = 0; f < c.flats().size(); ++f) {
      if (c.flat(f).dim() == 0) continue;
      std::set<std::size_t> below{f};
      std::vector<std::size_t> stack{f};
      while (!stack.empty()) {
        const std::size_t x = stack.back();
        stack.pop_back();
        for (auto ci : c.children(x)) {
          if (below.insert(c.cover(ci).child).second) stack.push_back(c.cover(ci).child);
        }
      }
      long chi = 0;
      for (auto m : below) chi += (c.flat(m).dim() % 2 == 0 ? 1 : -1) * static_cast<long>(c.cells(m).size());
      EXPECT_EQ(chi, 0) << describe(a) << " flat " << c.flat(f).id;
    }
  }
}

// Cells computed on a flat inside the ambient arrangement match cells of the restricted arrangement.
TEST(ToricCells, RestrictionCommutes) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 8; ++t) {
    const Arrangement a = random_toric(rng, 3, 4);
    const ArrangementComplex c = ArrangementComplex::build(a);
    for (std::size_t f = 1; f < c.flats().size(); ++f) {
      if (c.flat(f).dim() != 2) continue;
      const Arrangement r = restrict_to_flat(c.poset(), f);
      std::vector<Hyperplane> unique;
      for (const auto& h : make_toric(r.n, r.hyperplanes).hyperplanes) {
        if (std::none_of(unique.begin(), unique.end(),
                         [&](const Hyperplane& u) { return u.normal == h.normal && u.offset == h.offset; })) {
          unique.push_back(h);
        }
      }
      const Arrangement restricted = make_toric(r.n, unique);
      if (!validate_toric(restricted).valid) continue;
      const ArrangementComplex rc = ArrangementComplex::build(restricted);
      EXPECT_EQ(rc.top_cells(), c.cells(f).size()) << describe(a) << " flat " << c.flat(f).id;
    }
  }
}

TEST(H1Basis, Directions) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  const auto& ambient = h1_basis(g, 0);
  ASSERT_EQ(ambient.size(), 2u);
  EXPECT_EQ(ambient[0].direction, (IntVec{1, 0}));
  EXPECT_EQ(ambient[1].direction, (IntVec{0, 1}));
  const std::size_t circle = *g.poset().find("T[(1,0)=0]");
  ASSERT_EQ(h1_basis(g, circle).size(), 1u);
  EXPECT_EQ(tangent_to_ambient(g.flat(circle), to_rational(h1_basis(g, circle)[0].direction)),
            (Vec{0, 1}));
  const ArrangementComplex t = ArrangementComplex::build(tri());
  const std::size_t diag = *t.poset().find("T[(1,-1)=0]");
  const Vec d = tangent_to_ambient(t.flat(diag), to_rational(h1_basis(t, diag)[0].direction));
  EXPECT_TRUE(d == (Vec{1, 1}) || d == (Vec{-1, -1}));
  EXPECT_THROW(h1_basis(g, *g.poset().find("T[(1,0)=0;(0,1)=0]")), std::invalid_argument);
}

TEST(IntersectionIndex, Examples) {
  const ArrangementComplex g = ArrangementComplex::build(grid());
  const auto& loops = h1_basis(g, 0);
  const std::size_t horizontal = *g.poset().cover_between(0, *g.poset().find("T[(0,1)=0]"));
  const std::size_t vertical = *g.poset().cover_between(0, *g.poset().find("T[(1,0)=0]"));
  EXPECT_EQ(std::abs(intersection_index(loops[1], horizontal)), 1);
  EXPECT_EQ(intersection_index(loops[1], vertical), 0);
  EXPECT_EQ(std::abs(intersection_index(loops[0], vertical)), 1);
}

TEST(LoopBasePoint, AvoidsSubflats) {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10; ++t) {
    const ArrangementComplex c = ArrangementComplex::build(random_toric(rng, 2, 4));
    for (std::size_t f = 0; f < c.flats().size(); ++f) {
      if (c.flat(f).dim() == 0) continue;
      const Vec b = loop_base_point(c.poset(), f);
      for (auto ci : c.children(f)) {
        EXPECT_FALSE(is_integer(dot(c.cover(ci).conormal, b) - c.cover(ci).level));
      }
    }
  }
}

TEST(FlagEnumerate, Counts) {
  const ArrangementComplex t = ArrangementComplex::build(tri());
  EXPECT_EQ(flag_enumerate(t, 2).size(), 3u);
  const ArrangementComplex g = ArrangementComplex::build(grid());
  EXPECT_EQ(flag_enumerate(g, 2).size(), 8u);
  EXPECT_EQ(flag_enumerate(g, 0).size(), 1u);
  EXPECT_EQ(flag_enumerate(g, 1).size(), 4u);
}

// |Λ_k| equals the number of cover chains of length k from the ambient flat.
TEST(FlagEnumerate, MatchesCoverChains) {
  std::mt19937_64 rng(25);
  for (int t = 0; t < 6; ++t) {
    const ArrangementComplex c = ArrangementComplex::build(random_toric(rng, 3, 4));
    std::vector<std::size_t> ways(c.flats().size(), 0);
    ways[0] = 1;
    for (std::size_t k = 1; k <= c.n(); ++k) {
      std::vector<std::size_t> next(c.flats().size(), 0);
      for (const auto& cv : c.covers()) next[cv.child] += ways[cv.parent];
      std::size_t total = 0;
      for (auto w : next) total += w;
      EXPECT_EQ(flag_enumerate(c, k).size(), total);
      ways = next;
    }
  }
}

TEST(RelativeSign, Frames) {
  const FlatPoset g = toric_flats(grid());
  const Flat& point = g.flats[*g.find("T[(1,0)=0;(0,1)=0]")];
  EXPECT_EQ(relative_sign(point, point.frame), 1);
  Matrix swapped = point.frame;
  swapped.swap_cols(0, 1);
  EXPECT_EQ(relative_sign(point, swapped), -1);
  EXPECT_THROW(relative_sign(point, Matrix::from_rows({{1, 1}, {0, 0}}, 2)), std::domain_error);
}

}  // namespace
