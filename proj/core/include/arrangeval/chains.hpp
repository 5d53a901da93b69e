#pragma once

#include <vector>

#include "arrangeval/complex.hpp"
#include "arrangeval/linalg.hpp"
#include "arrangeval/polytope.hpp"
#include "arrangeval/sparse.hpp"

namespace arrangeval {

// Coordinates in layout(rank): one block per flag, one entry per cell of its base flat, values
// under the reference coorientation of the base flat. Rank 0 is the space V of convex chains.
struct ElementaryChain {
  std::size_t rank = 0;
  Vec values;
};

// One value per flag of Λ_rank under reference coorientations.
struct FlagFunction {
  std::size_t rank = 0;
  Vec values;
};

ElementaryChain zero_chain(const ArrangementComplex& c, std::size_t k);

// Multiplicities of lattice translates (torus) or containment (affine) of each top cell's
// interior point in p. Throws std::invalid_argument when a face of p spans no flat.
Vec indicator_chain(const ArrangementComplex& c, const Polytope& p);

// Matrix of D: Eᵏ → Eᵏ⁺¹ (k < n).
SparseMatrix leray_matrix(const ArrangementComplex& c, std::size_t k);
std::vector<SparseMatrix> leray_matrices(const ArrangementComplex& c);

ElementaryChain leray_D(const ArrangementComplex& c, const ElementaryChain& x);
ElementaryChain leray_power(const ArrangementComplex& c, const Vec& v, std::size_t k);

enum class Regroup { Forward, Backward };

// Wall cochains of rank-(l−1) flags (values on the cells of each child of the base flat, under
// the composed coorientation) share the coordinate order of Eˡ; Forward turns wall values into Eˡ
// values and Backward undoes it.
Vec iota_regroup(const ArrangementComplex& c, std::size_t l, const Vec& values, Regroup direction);

ElementaryChain flag_embed(const ArrangementComplex& c, const FlagFunction& f);
// Value on the first cell of each block; nullopt when some block is not constant.
std::optional<FlagFunction> flag_values(const ArrangementComplex& c, const ElementaryChain& x);

struct FiltrationReport {
  std::size_t dim_v = 0;
  std::vector<std::size_t> dims;           // dim V_k
  std::vector<std::size_t> dims_le;        // dim V_{≤k}
  std::vector<Subspace> quotients;         // V_k inside the Fₖ coordinate space
  std::vector<Subspace> lower;             // V_{≤k} inside V
  std::vector<std::vector<Vec>> quotient_lifts;  // chains of V_{≤k} whose Dᵏ images span V_k
  std::vector<std::vector<Vec>> quotient_images;  // Dᵏ of each lift as a flag function
};

FiltrationReport degree_filtration(const ArrangementComplex& c);

}  // namespace arrangeval
