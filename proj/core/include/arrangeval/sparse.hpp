#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "arrangeval/rational.hpp"

namespace arrangeval {

// Sorted (index, value) pairs with nonzero values.
using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);
// y += f·x
void axpy(SparseVec& y, const Rational& f, const SparseVec& x);
SparseVec scaled(const SparseVec& x, const Rational& f);

class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  void add(std::size_t row, std::size_t col, const Rational& value);
  void finalize();

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& row(std::size_t i) const { return row_data_[i]; }

  Vec apply(const Vec& x) const;
  SparseVec apply(const SparseVec& x) const;
  // xᵀ·M for a row vector x.
  Vec apply_transpose(const Vec& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::map<std::size_t, Rational>> building_;
  std::vector<SparseVec> row_data_;
  std::vector<SparseVec> col_data_;
};

// Incremental row echelon basis. Each inserted vector carries a tag vector transformed by the
// same operations, so a vector reducing to zero yields the combination that annihilates it.
class EchelonBasis {
 public:
  struct Entry {
    SparseVec vec;
    SparseVec tag;
  };

  // Returns the reduced tag when vec depends on earlier vectors, nullopt otherwise.
  std::optional<SparseVec> insert(SparseVec vec, SparseVec tag);
  std::size_t rank() const { return rows_.size(); }
  const std::vector<Entry>& rows() const { return rows_; }

 private:
  std::vector<Entry> rows_;
  std::map<std::size_t, std::size_t> lead_;
};

// Solution of rows·x = rhs with zero non-pivot coordinates; nullopt when inconsistent.
std::optional<Vec> sparse_solve(const std::vector<SparseVec>& rows, const Vec& rhs,
                                std::size_t cols);
std::size_t sparse_rank(const std::vector<SparseVec>& rows);

}  // namespace arrangeval
