#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "arrangeval/linalg.hpp"

namespace arrangeval {

// normal·x ≤ offset
struct Halfspace {
  Vec normal;
  Rational offset;
};

// Bounded full-dimensional convex polytope in Rᵐ kept in both representations. Each vertex
// records the constraints tight at it; two vertices span an edge when their common tight
// normals have rank m − 1.
class ConvexPiece {
 public:
  static ConvexPiece box(const Vec& lo, const Vec& hi);

  std::size_t dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Halfspace>& constraints() const { return constraints_; }
  const std::vector<std::vector<std::size_t>>& tight() const { return tight_; }
  Vec vertex_average() const;
  // True when some vertex lies on constraint c.
  bool touches(std::size_t c) const;

  // Pieces on the sides normal·x ≤ offset and normal·x ≥ offset; a side is absent when the
  // hyperplane does not cut the interior.
  std::pair<std::optional<ConvexPiece>, std::optional<ConvexPiece>> split(
      const Vec& normal, const Rational& offset) const;

 private:
  std::size_t dim_ = 0;
  std::vector<Halfspace> constraints_;
  std::vector<Vec> vertices_;
  std::vector<std::vector<std::size_t>> tight_;
};

// Vertices of the bounded polytope {x ∈ Rᵐ : constraints}, sorted lexicographically.
std::vector<Vec> hpoly_vertices(const std::vector<Halfspace>& constraints, std::size_t m);

struct LinearConstraint {
  Vec a;
  Rational b;
  bool strict = false;  // a·x < b when set, a·x ≤ b otherwise
};

// Fourier–Motzkin elimination with back-substitution; returns a witness point when feasible.
std::optional<Vec> fm_feasible(const std::vector<LinearConstraint>& constraints, std::size_t m);

std::size_t affine_rank(const std::vector<Vec>& points);

struct FaceLattice {
  std::vector<Vec> vertices;
  std::vector<std::vector<std::size_t>> faces;  // sorted vertex index sets; faces[0] is the polytope
  std::vector<std::size_t> face_dim;
  std::vector<Halfspace> facets;                // primitive integer normals, outward
  std::vector<std::size_t> facet_face;
};

// Face lattice of the convex hull of points spanning Rᵐ (m = point length).
FaceLattice face_lattice(const std::vector<Vec>& points);

// Euclidean volume of the convex hull of points spanning Rᵐ, via a pulling triangulation from
// the first vertex.
Rational hull_volume(const std::vector<Vec>& points);
Rational simplex_volume(const std::vector<Vec>& simplex);
std::vector<std::vector<Vec>> pulling_triangulation(const std::vector<Vec>& points);

class Polytope {
 public:
  Polytope() = default;
  // Convex hull of full-dimensional points in Rⁿ. Throws std::invalid_argument otherwise.
  static Polytope from_vertices(const std::vector<Vec>& points);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<Vec>& vertices() const { return lattice_.vertices; }
  const std::vector<Halfspace>& facet_halfspaces() const { return lattice_.facets; }
  const FaceLattice& lattice() const { return lattice_; }
  bool empty() const { return lattice_.vertices.empty(); }

  bool contains(const Vec& x) const;
  bool contains_strictly(const Vec& x) const;
  Polytope translated(const Vec& v) const;
  Polytope scaled(const Rational& s) const;
  Vec barycenter_of_face(std::size_t face) const;

 private:
  std::size_t dim_ = 0;
  FaceLattice lattice_;
};

Vec vertex_average(const std::vector<Vec>& points);
bool lex_less(const Vec& a, const Vec& b);

}  // namespace arrangeval
