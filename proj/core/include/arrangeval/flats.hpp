#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrangeval/lattice.hpp"
#include "arrangeval/linalg.hpp"

namespace arrangeval {

enum class Space { Toric, Affine };

// {x : normal·x = offset}, taken mod 1 on the torus. The positive side is normal·x > offset.
struct Hyperplane {
  IntVec normal;
  Rational offset;
};

using Flag = std::vector<std::size_t>;

struct Arrangement {
  Space space = Space::Toric;
  std::size_t n = 0;
  std::vector<Hyperplane> hyperplanes;
};

struct ValidationReport {
  bool valid = true;
  std::vector<std::string> violations;

  void fail(std::string message) {
    valid = false;
    violations.push_back(std::move(message));
  }
};

struct Flat {
  std::string id;
  std::size_t codim = 0;
  IntMatrix conormals;      // Hermite basis of the saturated conormal lattice; rows fix the reference coorientation
  Vec levels;               // conormals·x on the flat, reduced mod 1 on the torus
  Vec base_point;
  IntMatrix direction;      // n × dim, lattice basis of the tangent directions
  Matrix frame;             // n × codim, conormals·frame = I
  IntMatrix integral_frame; // n × codim, integer right inverse of conormals
  std::vector<std::size_t> hyperplanes;  // hyperplanes containing the flat
  bool at_infinity = false;

  std::size_t dim() const { return direction.cols(); }
};

// Parent ⊃ child of codimension one inside the parent. In the parent's coordinates
// x = base + direction·t the child is {t : conormal·t ≡ level}.
struct Cover {
  std::size_t parent = 0;
  std::size_t child = 0;
  IntVec conormal;   // primitive, first nonzero entry positive
  Rational level;
  Vec transversal;   // direction·conormalᵀ, points to the positive side
  int sign = 1;      // composed coorientation [transversal, parent frame] against the child's reference
};

struct FlatPoset {
  Space space = Space::Toric;
  std::size_t n = 0;
  std::vector<Hyperplane> hyperplanes;
  std::vector<Flat> flats;                       // ordered by (codim, id); flats[0] is the ambient space
  std::vector<Cover> covers;
  std::vector<std::vector<std::size_t>> children;  // cover indices by parent
  std::vector<std::vector<std::size_t>> parents;   // cover indices by child
  std::optional<std::size_t> infinity;

  std::optional<std::size_t> find(const std::string& id) const;
  std::optional<std::size_t> cover_between(std::size_t parent, std::size_t child) const;
  // Chains ambient = L⁰ ⊃ … ⊃ Lᵏ with codim Lⁱ = i, sorted lexicographically.
  std::vector<Flag> flags(std::size_t k) const;

  std::map<std::string, std::size_t> by_id;
};

// Top-dimensional cell of a flat's induced arrangement.
struct Cell {
  IntVec code;                // reduced floor vector on the torus, sign vector in the affine case
  Vec point;                  // ambient interior point
  Vec local_point;
  std::vector<Vec> vertices;  // ambient vertices of the representative, clipped to the box when unbounded
  Rational volume;            // lattice-normalized; 0 when unbounded
  bool bounded = true;
};

struct CellTable {
  std::vector<Cell> cells;                 // sorted by code
  IntMatrix lattice;                       // torus: Hermite rows of the code translation lattice
  std::vector<std::size_t> pivots;
  std::map<IntVec, std::size_t> index;
};

struct Crossing {
  std::size_t cover = 0;
  std::size_t cell = 0;   // cell of the cover's child hit by the loop
  int sign = 1;
  Rational parameter;
};

// Straight loop through a generic base point of a flat, in local coordinates.
struct LoopClass {
  std::size_t flat = 0;
  IntVec direction;
  Vec base_point;
  std::vector<Crossing> crossings;
};

std::string flat_id(Space space, const IntMatrix& conormals, const Vec& levels);

// Flat through point with conormal lattice spanned by rows (saturated here).
Flat make_flat(Space space, const IntMatrix& rows, const Vec& point);

// Local coordinates t with x ≡ base + direction·t (mod Zⁿ on the torus). x must lie on the flat.
Vec to_local(Space space, const Flat& flat, const Vec& x);
// Ambient point base + direction·t.
Vec to_ambient(const Flat& flat, const Vec& t);
// Ambient tangent vector direction·s.
Vec tangent_to_ambient(const Flat& flat, const Vec& s);

bool contains_flat(Space space, const Hyperplane& h, const Flat& flat);

// Every component of every intersection of hyperplanes. With with_infinity (affine only) the
// sphere compactification adds the point ∞ below every line.
FlatPoset build_flat_poset(Space space, std::size_t n, const std::vector<Hyperplane>& hyperplanes,
                           bool with_infinity = false);

}  // namespace arrangeval
