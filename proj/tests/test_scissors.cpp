#include <random>

#include <gtest/gtest.h>

#include "arrangeval/scissors.hpp"
#include "support.hpp"

namespace {

using namespace arrangeval;
using namespace arrangeval::testing;

const Polygon kSquare{{{0, 0}, {1, 0}, {1, 1}, {0, 1}}};
const Polygon kPara{{{0, 0}, {1, 0}, {ratio(3, 2), 1}, {ratio(1, 2), 1}}};
const Polygon kTriangle{{{0, 0}, {2, 0}, {0, 1}}};

Polytope as_polytope(const Polygon& p) { return Polytope::from_vertices(p.vertices); }

Polygon translate(const Polygon& p, const Vec& v) {
  Polygon q = p;
  for (auto& x : q.vertices) x = add(x, v);
  return q;
}

TEST(ValidatePolygon, RejectsBadInput) {
  EXPECT_NO_THROW(validate_polygon(kSquare));
  EXPECT_THROW(validate_polygon(Polygon{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}}), std::invalid_argument);
  EXPECT_THROW(validate_polygon(Polygon{{{0, 0}, {1, 0}, {2, 0}, {0, 1}}}), std::invalid_argument);
  EXPECT_THROW(validate_polygon(Polygon{{{0, 0}, {1, 0}}}), std::invalid_argument);
}

TEST(Upsilon, Examples) {
  EXPECT_EQ(polygon_area(kSquare), Rational(1));
  EXPECT_EQ(upsilon_line(kSquare, {1, 0}), Rational(0));
  EXPECT_EQ(upsilon_line(kTriangle, {1, 0}), Rational(-2));
  EXPECT_EQ(upsilon_line(kTriangle, {1, 0}, -1), Rational(2));
  EXPECT_EQ(upsilon_line(kPara, {1, 0}), Rational(0));
  EXPECT_EQ(upsilon_line(kPara, {1, 2}), Rational(0));
  EXPECT_EQ(upsilon_line(kSquare, {1, 1}), Rational(0));
}

TEST(Upsilon, CentrallySymmetricVanishes) {
  std::mt19937_64 rng(71);
  for (int t = 0; t < 20; ++t) {
    const Vec u = random_vec(rng, 2), w = random_vec(rng, 2);
    const Rational cross = u[0] * w[1] - u[1] * w[0];
    if (cross == 0) continue;
    const Vec a = cross > 0 ? u : w, b = cross > 0 ? w : u;
    const Polygon p{{{0, 0}, a, add(a, b), b}};
    for (const IntVec& d : std::vector<IntVec>{{1, 0}, {0, 1}, {1, 1}, {1, -2}}) EXPECT_EQ(upsilon_line(p, d), 0);
  }
}

TEST(Glur, Verdicts) {
  const GlurResult a = hadwiger_glur_2d(kSquare, kPara);
  EXPECT_TRUE(a.verdict.congruent);
  EXPECT_FALSE(a.verdict.witness.has_value());
  const GlurResult b = hadwiger_glur_2d(kTriangle, kSquare);
  EXPECT_FALSE(b.verdict.congruent);
  ASSERT_TRUE(b.verdict.witness.has_value());
  EXPECT_EQ(b.verdict.witness->invariant, "upsilon");
  const GlurResult c = hadwiger_glur_2d(kSquare, Polygon{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}});
  EXPECT_FALSE(c.verdict.congruent);
  EXPECT_EQ(c.verdict.witness->invariant, "area");
}

TEST(Glur, TranslationInvariant) {
  std::mt19937_64 rng(72);
  for (const auto& p : {kSquare, kPara, kTriangle}) {
    for (int t = 0; t < 5; ++t) {
      Vec v = random_vec(rng, 2);
      v[0] += ratio(1, 3);
      EXPECT_TRUE(hadwiger_glur_2d(p, translate(p, v)).verdict.congruent);
    }
  }
}

TEST(Zn, Examples) {
  const Polytope quarter = Polytope::from_vertices({{0, 0}, {ratio(1, 2), 0}, {ratio(1, 2), ratio(1, 2)}, {0, ratio(1, 2)}});
  const Polytope half_tri = Polytope::from_vertices({{0, 0}, {1, 0}, {0, ratio(1, 2)}});
  const ZnResult r = zn_congruent(quarter, half_tri);
  EXPECT_FALSE(r.verdict.congruent);
  ASSERT_TRUE(r.verdict.witness.has_value());
  EXPECT_EQ(r.verdict.witness->invariant, "cell");
  const Polytope unit = as_polytope(kSquare);
  const Polytope shifted = Polytope::from_vertices({{ratio(1, 2), 0}, {ratio(3, 2), 0}, {ratio(3, 2), 1}, {ratio(1, 2), 1}});
  EXPECT_TRUE(zn_congruent(unit, shifted).verdict.congruent);
  EXPECT_TRUE(zn_congruent(unit, unit.translated({3, -2})).verdict.congruent);
  EXPECT_EQ(zn_congruent(unit, shifted).left.size(), zn_congruent(unit, shifted).points.size());
}

TEST(Zn, JointArrangementIsValid) {
  const Polytope tri = as_polytope(kTriangle);
  const Arrangement a = joint_toric_arrangement(tri, as_polytope(kSquare));
  EXPECT_EQ(a.space, Space::Toric);
  EXPECT_TRUE(validate_toric(a).valid);
  const Arrangement b = joint_toric_arrangement(Polytope::from_vertices({{0, 0}, {1, 1}, {0, 1}}),
                                                Polytope::from_vertices({{0, 0}, {1, 1}, {0, 1}}));
  EXPECT_TRUE(validate_toric(b).valid);
}

TEST(Zn, CongruenceImpliesGlur) {
  std::mt19937_64 rng(73);
  const std::vector<Polygon> shapes = {kSquare, kPara, kTriangle, Polygon{{{0, 0}, {1, 0}, {0, 1}}},
                                       Polygon{{{0, 0}, {1, 0}, {1, 1}}}};
  for (const auto& p : shapes) {
    for (const auto& q : shapes) {
      const bool zn = zn_congruent(as_polytope(p), as_polytope(q)).verdict.congruent;
      const bool glur = hadwiger_glur_2d(p, q).verdict.congruent;
      if (zn) EXPECT_TRUE(glur);
    }
    const Vec v = random_vec(rng, 2);
    EXPECT_TRUE(zn_congruent(as_polytope(p), as_polytope(translate(p, v))).verdict.congruent);
  }
}

TEST(Zn, OneAndThreeDimensions) {
  const Polytope half = Polytope::from_vertices({{0}, {ratio(1, 2)}});
  EXPECT_TRUE(zn_congruent(half, Polytope::from_vertices({{-1}, {ratio(-1, 2)}})).verdict.congruent);
  EXPECT_FALSE(zn_congruent(half, Polytope::from_vertices({{ratio(1, 4)}, {ratio(3, 4)}})).verdict.congruent);
  EXPECT_TRUE(zn_congruent(Polytope::from_vertices({{0}, {1}}), Polytope::from_vertices({{ratio(1, 3)}, {ratio(4, 3)}}))
                  .verdict.congruent);
  std::vector<Vec> cube;
  for (int m = 0; m < 8; ++m) cube.push_back({m & 1, (m >> 1) & 1, (m >> 2) & 1});
  const Polytope c = Polytope::from_vertices(cube);
  EXPECT_TRUE(zn_congruent(c, c.translated({ratio(1, 3), 0, 0})).verdict.congruent);
}

}  // namespace
