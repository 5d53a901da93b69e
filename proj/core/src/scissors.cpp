#include "arrangeval/scissors.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "arrangeval/chains.hpp"
#include "arrangeval/toric.hpp"

namespace arrangeval {

namespace {

Rational cross(const Vec& a, const Vec& b, const Vec& c) {
  return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

IntVec normalized_direction(const Vec& edge) {
  return primitive(primitive_integer(edge), true);
}

}  // namespace

void validate_polygon(const Polygon& p) {
  const auto& v = p.vertices;
  if (v.size() < 3) throw std::invalid_argument("polygon needs at least three vertices");
  for (const auto& x : v) {
    if (x.size() != 2) throw std::invalid_argument("polygon vertices must be planar");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % v.size()];
    const Vec& c = v[(i + 2) % v.size()];
    if (cross(a, b, c) <= 0) {
      throw std::invalid_argument("polygon is not strictly convex and counterclockwise at vertex " +
                                  std::to_string((i + 1) % v.size()));
    }
  }
  // Rules out star polygons.
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % v.size()];
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (j == i || j == (i + 1) % v.size()) continue;
      if (cross(a, b, v[j]) <= 0) throw std::invalid_argument("polygon is not convex");
    }
  }
}

Rational polygon_area(const Polygon& p) {
  Rational twice = 0;
  const auto& v = p.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Vec& a = v[i];
    const Vec& b = v[(i + 1) % v.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return twice / 2;
}

Rational upsilon_line(const Polygon& p, const IntVec& direction, int coorientation) {
  if (direction.size() != 2 || is_zero(direction)) throw std::invalid_argument("upsilon_line: zero direction");
  if (coorientation != 1 && coorientation != -1) throw std::invalid_argument("upsilon_line: coorientation must be ±1");
  const Vec d = to_rational(direction);
  const Vec n{Rational(-coorientation) * d[1], Rational(coorientation) * d[0]};
  const auto& v = p.vertices;
  Rational hi = dot(n, v[0]), lo = hi;
  for (const auto& x : v) {
    const Rational h = dot(n, x);
    if (hi < h) hi = h;
    if (h < lo) lo = h;
  }
  const Rational dd = dot(d, d);
  auto support_length = [&](const Rational& level) -> Rational {
    Rational a, b;
    bool first = true;
    for (const auto& x : v) {
      if (dot(n, x) != level) continue;
      const Rational t = dot(d, x) / dd;
      if (first || t < a) a = t;
      if (first || b < t) b = t;
      first = false;
    }
    return b - a;
  };
  return support_length(hi) - support_length(lo);
}

namespace {

InvariantTable invariants(const Polygon& p, const std::set<IntVec>& directions) {
  InvariantTable t;
  t.area = polygon_area(p);
  for (const auto& d : directions) t.upsilon.emplace_back(d, upsilon_line(p, d, 1));
  return t;
}

}  // namespace

GlurResult hadwiger_glur_2d(const Polygon& p, const Polygon& q) {
  validate_polygon(p);
  validate_polygon(q);
  std::set<IntVec> directions;
  for (const Polygon* poly : {&p, &q}) {
    const auto& v = poly->vertices;
    for (std::size_t i = 0; i < v.size(); ++i) {
      directions.insert(normalized_direction(sub(v[(i + 1) % v.size()], v[i])));
    }
  }
  GlurResult r;
  r.left = invariants(p, directions);
  r.right = invariants(q, directions);
  r.verdict.congruent = true;
  if (r.left.area != r.right.area) {
    r.verdict.congruent = false;
    r.verdict.witness = CongruenceWitness{"area", std::nullopt, std::nullopt, r.left.area, r.right.area};
    return r;
  }
  for (std::size_t i = 0; i < r.left.upsilon.size(); ++i) {
    if (r.left.upsilon[i].second != r.right.upsilon[i].second) {
      r.verdict.congruent = false;
      r.verdict.witness = CongruenceWitness{"upsilon", r.left.upsilon[i].first, std::nullopt,
                                            r.left.upsilon[i].second, r.right.upsilon[i].second};
      return r;
    }
  }
  return r;
}

Arrangement joint_toric_arrangement(const Polytope& p, const Polytope& q) {
  if (p.ambient_dim() != q.ambient_dim()) throw std::invalid_argument("zn_congruent: dimension mismatch");
  const std::size_t n = p.ambient_dim();
  std::set<std::pair<IntVec, Rational>> seen;
  std::vector<Hyperplane> hs;
  IntMatrix normals(0, n);
  for (const Polytope* poly : {&p, &q}) {
    for (const auto& h : poly->facet_halfspaces()) {
      const IntVec a = primitive(primitive_integer(h.normal), true);
      Rational offset;
      for (const auto& v : poly->vertices()) {
        if (dot(h.normal, v) == h.offset) {
          offset = dot(a, v);
          break;
        }
      }
      offset = frac_of(offset);
      if (seen.emplace(a, offset).second) {
        hs.push_back({a, offset});
        normals.append_row(a);
      }
    }
  }
  if (rank(to_rational(normals)) < n) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVec e(n);
      e[i] = 1;
      if (seen.emplace(e, Rational(0)).second) hs.push_back({e, Rational(0)});
    }
  }
  return make_toric(n, std::move(hs));
}

ZnResult zn_congruent(const Polytope& p, const Polytope& q) {
  ZnResult r;
  r.arrangement = joint_toric_arrangement(p, q);
  const ArrangementComplex c = ArrangementComplex::build(r.arrangement, false);
  r.left = indicator_chain(c, p);
  r.right = indicator_chain(c, q);
  for (const auto& cell : c.cells(0)) r.points.push_back(cell.point);
  r.verdict.congruent = r.left == r.right;
  if (!r.verdict.congruent) {
    for (std::size_t i = 0; i < r.left.size(); ++i) {
      if (r.left[i] != r.right[i]) {
        r.verdict.witness = CongruenceWitness{"cell", std::nullopt, r.points[i], r.left[i], r.right[i]};
        break;
      }
    }
  }
  return r;
}

}  // namespace arrangeval
