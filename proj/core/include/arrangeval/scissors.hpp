#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrangeval/complex.hpp"
#include "arrangeval/polytope.hpp"

namespace arrangeval {

// Strictly convex polygon with counterclockwise vertices.
struct Polygon {
  std::vector<Vec> vertices;
};

// Throws std::invalid_argument unless the vertices form a strictly convex counterclockwise polygon.
void validate_polygon(const Polygon& p);

Rational polygon_area(const Polygon& p);

// Len(P ∩ L₊) − Len(P ∩ L₋) for the two support lines parallel to direction, measured in units of
// the direction vector. L₊ is the support line on the side of the coorientation (−d_y, d_x)·s.
Rational upsilon_line(const Polygon& p, const IntVec& direction, int coorientation = 1);

struct InvariantTable {
  Rational area;
  std::vector<std::pair<IntVec, Rational>> upsilon;  // sign-normalized primitive directions
};

struct CongruenceWitness {
  std::string invariant;  // "area", "upsilon" or "cell"
  std::optional<IntVec> direction;
  std::optional<Vec> point;
  Rational left;
  Rational right;
};

struct CongruenceVerdict {
  bool congruent = false;
  std::optional<CongruenceWitness> witness;
};

struct GlurResult {
  CongruenceVerdict verdict;
  InvariantTable left;
  InvariantTable right;
};

// Translation scissors congruence in the plane: equal area and equal Υ on every edge direction.
GlurResult hadwiger_glur_2d(const Polygon& p, const Polygon& q);

struct ZnResult {
  CongruenceVerdict verdict;
  Arrangement arrangement;
  Vec left;   // lattice-translate counts per top cell
  Vec right;
  std::vector<Vec> points;  // interior point of each top cell
};

// Facet hyperplanes of both polytopes reduced mod 1, plus the coordinate hyperplanes when the
// facet normals do not span.
Arrangement joint_toric_arrangement(const Polytope& p, const Polytope& q);

// Scissors congruence under Zⁿ translations via equality of the torus pushforwards.
ZnResult zn_congruent(const Polytope& p, const Polytope& q);

}  // namespace arrangeval
