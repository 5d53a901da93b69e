#pragma once

#include <optional>

#include "arrangeval/flats.hpp"
#include "arrangeval/polytope.hpp"

namespace arrangeval {

class ArrangementComplex;

using AffineHyperplane = Hyperplane;

// Primitive nonzero normals and no repeated hyperplane. With sphere set, additionally no
// hyperplane may be parallel to and disjoint from a flat of dimension ≥ 2, since in the sphere
// compactification the two would meet only at ∞.
ValidationReport validate_affine(const Arrangement& a, bool sphere);

FlatPoset aff_flats(const Arrangement& a, bool with_infinity = false);

// Chambers of the induced arrangement on a flat, found by splitting a box that strictly contains
// the base point of every subflat. The ∞ flat has a single cell.
CellTable affine_cell_table(const FlatPoset& poset, std::size_t flat);

// Sign vector of x + ε·dir.
IntVec affine_cell_code(const FlatPoset& poset, const Vec& x, const Vec& dir);

const std::vector<Cell>& aff_cells(const ArrangementComplex& c, std::size_t flat);

// Volume in the flat's lattice coordinates. Points of p must lie on a translate of the flat
// and span it.
Rational normalized_volume(const std::vector<Vec>& points, const Flat& flat);
Rational normalized_volume(const Polytope& p, const Flat& flat);

// Flat spanned by each face of p (affine span projected to the torus in the toric case).
// Throws std::invalid_argument when a facet is not an arrangement hyperplane.
std::vector<std::size_t> face_flats(const Polytope& p, const FlatPoset& poset);

struct PolytopeFlag {
  std::vector<std::size_t> faces;  // F⁰ ⊃ … ⊃ Fᵏ as face indices of the polytope
  Flag flag;                       // affine spans
  std::vector<Vec> frame;          // barycenter differences v_{k−1}, …, v_0
  int sign = 1;                    // frame against the reference coorientation of the base flat
};

std::vector<PolytopeFlag> polytope_flags(const Polytope& p, const FlatPoset& poset, std::size_t k);

}  // namespace arrangeval
