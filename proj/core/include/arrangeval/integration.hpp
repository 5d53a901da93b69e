#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "arrangeval/chains.hpp"

namespace arrangeval {

// Which cell of each base flat carries the value zero.
enum class AnchorStrategy { LexMin, Unbounded };

struct IntegrationOptions {
  AnchorStrategy anchor = AnchorStrategy::LexMin;
  std::optional<std::uint64_t> shuffle_seed;  // permutes the traversal order
};

// A wall whose jump disagrees with the integrated values.
struct IntegrationError : std::runtime_error {
  IntegrationError(std::string flag, std::size_t cover, std::size_t wall, Rational expected,
                   Rational found);

  std::string flag;
  std::size_t cover;
  std::size_t wall;
  Rational expected;
  Rational found;
};

std::size_t anchor_cell(const ArrangementComplex& c, std::size_t flat, AnchorStrategy strategy);

// η ∈ Eᵏ⁻¹ with Dη = x and η zero on the anchor cell of every block. Throws IntegrationError
// when x has no such preimage.
ElementaryChain integrate_step(const ArrangementComplex& c, const ElementaryChain& x,
                               const IntegrationOptions& options = {});

// Periods of a rank-p chain along the loops of the base flat of the p−1 flag `anchor`.
Vec chain_periods(const ArrangementComplex& c, const ElementaryChain& x, std::size_t anchor);

// v ∈ V with Dᵏv = flag_embed(f), built by repeated integration with flag-constant corrections.
// Torus arrangements only. Throws InfeasibleLift when f lies outside V_k.
Vec lift_to_chain(const ArrangementComplex& c, const FlagFunction& f,
                  const IntegrationOptions& options = {});

// Same preimage found by one linear solve against Dᵏ of the top cells.
Vec lift_direct(const ArrangementComplex& c, const FlagFunction& f);

}  // namespace arrangeval
