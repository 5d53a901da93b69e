#pragma once

#include "arrangeval/linalg.hpp"

namespace arrangeval {

struct Smith {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
  std::size_t rank = 0;
};

// U·a·V = D with U, V unimodular and d_i | d_{i+1}, d_i ≥ 0.
Smith smith_normal_form(const IntMatrix& a);

// Row-style Hermite normal form of the row lattice; zero rows dropped.
IntMatrix hermite_normal_form(const IntMatrix& a);

// Columns form the canonical (Hermite-reduced) basis of {x ∈ Zⁿ : a·x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

// Hermite basis of span_Q(rows) ∩ Zⁿ.
IntMatrix saturate(const IntMatrix& rows);

IntMatrix stack_rows(const IntMatrix& top, const IntVec& row);

}  // namespace arrangeval
