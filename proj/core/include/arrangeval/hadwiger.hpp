#pragma once

#include <optional>
#include <vector>

#include "arrangeval/chains.hpp"
#include "arrangeval/polytope.hpp"

namespace arrangeval {

// A flag of Λ_k with an orientation relative to the reference coorientation of its base flat.
struct HadwigerLabel {
  Flag flag;
  int orientation = 1;

  std::size_t rank() const { return flag.size() - 1; }
};

// Sign of the first face chain of p whose spans equal the flag; nullopt when none does.
std::optional<int> flag_of_polytope(const ArrangementComplex& c, const Polytope& p, const Flag& flag);

// Υ of every reference-oriented flag of Λ_k: Σ over matching face chains of sign × normalized
// volume of the smallest face.
Vec hadwiger_vector(const ArrangementComplex& c, const Polytope& p, std::size_t k);

// The same values as vol ∘ π ∘ Dᵏ applied to the indicator chain of p.
Vec hadwiger_vector_via_leray(const ArrangementComplex& c, const Polytope& p, std::size_t k);

Rational hadwiger_eval(const ArrangementComplex& c, const HadwigerLabel& label, const Polytope& p);

// Signed unit vector of F_k at the label's flag.
FlagFunction one_flag_chain(const ArrangementComplex& c, const HadwigerLabel& label);

// Rows: Υ of each flag of Λ_k as a functional on V, given by its values on top cells.
Matrix hadwiger_functionals(const ArrangementComplex& c, std::size_t k);

// Coefficients over reference-oriented flags, one vector per rank. The table stores the folded
// value ½(f(Lc) − f(−Lc)) = f(Lc).
struct DecompositionTable {
  std::vector<Vec> coefficients;
};

// Rank peeling of a functional on V (values on top cells). Torus arrangements only.
DecompositionTable valuation_decompose(const ArrangementComplex& c, const Vec& mu,
                                       const FiltrationReport& filtration);
DecompositionTable valuation_decompose(const ArrangementComplex& c, const Vec& mu);

// Σ_k Σ_Lc f_k(Lc) Υ_Lc as values on top cells.
Vec reconstruct(const ArrangementComplex& c, const DecompositionTable& table);

// Hyperplane map j given by indices into the target arrangement. Every image must be parallel to
// its source. Throws std::invalid_argument when a flat has no image component or the image of a
// flag is not a flag.
std::size_t induced_flat_map(const ArrangementComplex& source, const ArrangementComplex& target,
                             const std::vector<std::size_t>& j, std::size_t flat);
HadwigerLabel induced_label_map(const ArrangementComplex& source, const ArrangementComplex& target,
                                const std::vector<std::size_t>& j, const HadwigerLabel& label);

}  // namespace arrangeval
