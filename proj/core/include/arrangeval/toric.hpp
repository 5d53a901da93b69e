#pragma once

#include "arrangeval/flats.hpp"

namespace arrangeval {

class ArrangementComplex;

using ToricHyperplane = Hyperplane;

// Offsets reduced into [0,1).
Arrangement make_toric(std::size_t n, std::vector<Hyperplane> hyperplanes);

// Primitive nonzero normals, reduced offsets, no repeated subtorus, and a 0-flat (which is
// equivalent to every lifted top cell being bounded).
ValidationReport validate_toric(const Arrangement& a);

FlatPoset toric_flats(const Arrangement& a);

// Induced arrangement on a flat of positive dimension in its local coordinates.
Arrangement restrict_to_flat(const FlatPoset& poset, std::size_t flat);

// Cells by splitting the unit box of the flat's parameter space with the level sets of every
// induced hyperplane; pieces are identified by their floor vectors modulo lattice translation.
CellTable toric_cell_table(const FlatPoset& poset, std::size_t flat);

// Reduced floor vector of the cell containing x + ε·dir, where x lies on the flat and dir is
// tangent to it (dir = 0 for a generic point).
IntVec toric_cell_code(const FlatPoset& poset, const CellTable& table, std::size_t flat,
                       const Vec& x, const Vec& dir);
IntVec reduce_code(const CellTable& table, IntVec code);

const std::vector<Cell>& toric_cells(const ArrangementComplex& c, std::size_t flat);

// First point of the grids (1/q)Zᵐ, q = 2, 3, …, off every child of the flat and with distinct
// crossing parameters along each coordinate direction.
Vec loop_base_point(const FlatPoset& poset, std::size_t flat);

const std::vector<LoopClass>& h1_basis(const ArrangementComplex& c, std::size_t flat);
int intersection_index(const LoopClass& loop, std::size_t cover);

std::vector<Flag> flag_enumerate(const ArrangementComplex& c, std::size_t k);

// Sign of det(conormals(inner)·frame) for a composed conormal frame (columns). Throws
// std::domain_error when the frame is not transversal to inner.
int relative_sign(const Flat& inner, const Matrix& frame);

}  // namespace arrangeval
