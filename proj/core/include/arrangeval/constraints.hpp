#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrangeval/chains.hpp"

namespace arrangeval {

enum class RowKind { Reciprocity, Period };

struct ConstraintRow {
  RowKind kind = RowKind::Reciprocity;
  std::size_t type = 0;  // reciprocity: the missing position m; period: unused
  Flag anchor;           // reciprocity: the flag without position m; period: Lc° ∈ Λ_{k−1}
  std::size_t loop = 0;  // period: index into the loops of the anchor's base flat
  std::vector<std::pair<std::size_t, Rational>> coefficients;  // index in Λ_k → coefficient
};

// Σ over completions M of f(Lc° ∪ {M}) = 0 for every partial flag missing one position 0 < m < k.
std::vector<ConstraintRow> reciprocity_system(const ArrangementComplex& c, std::size_t k);

// Σ_M (γ·M)·σ_M·f(Lc° ∪ {M}) = 0 for every Lc° ∈ Λ_{k−1} and every loop γ of its base flat.
std::vector<ConstraintRow> period_system(const ArrangementComplex& c, std::size_t k);

Matrix constraint_matrix(const std::vector<ConstraintRow>& rows, std::size_t cols);

Subspace solution_space(const ArrangementComplex& c, std::size_t k, bool include_periods);

// Jumps of the rank-k wall cochain around every codimension-two cell of every rank-(k−1) base flat
// sum to zero. Cells at ∞ are skipped.
bool cocycle_check(const ArrangementComplex& c, const ElementaryChain& x);

// Chain-level reciprocity of type (m, rank): the components sharing each anchor sum to zero.
bool satisfies_reciprocity(const ArrangementComplex& c, const ElementaryChain& x, std::size_t m);

enum class VerifyMode { Toric, Pseudoaffine, AffineCompact };

struct DescriptionCheck {
  std::size_t k = 0;
  std::string name;
  std::size_t dim_flags = 0;
  std::size_t rows = 0;
  std::size_t dim_solutions = 0;
  std::size_t dim_expected = 0;
  bool holds = false;
};

struct VerificationReport {
  VerifyMode mode = VerifyMode::Toric;
  FiltrationReport filtration;
  std::vector<DescriptionCheck> checks;
  std::optional<std::size_t> bounded_dim;  // dim V_cb in affine-compact mode

  bool ok() const;
};

// Compares each V_k (image of Dᵏ) with the solutions of the constraint systems the mode predicts.
VerificationReport verify_descriptions(const ArrangementComplex& c, VerifyMode mode);

}  // namespace arrangeval
