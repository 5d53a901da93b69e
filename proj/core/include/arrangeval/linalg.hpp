#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arrangeval/rational.hpp"

namespace arrangeval {

template <class T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    DenseMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("from_rows: ragged input");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static DenseMatrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    DenseMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("from_columns: ragged input");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void append_row(const std::vector<T>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw std::invalid_argument("append_row: length mismatch");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  DenseMatrix transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    }
    return t;
  }

  DenseMatrix submatrix_rows(std::size_t begin, std::size_t end) const {
    DenseMatrix m(end - begin, cols_);
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
    }
    return m;
  }

  DenseMatrix submatrix_cols(std::size_t begin, std::size_t end) const {
    DenseMatrix m(rows_, end - begin);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = begin; j < end; ++j) m(i, j - begin) = (*this)(i, j);
    }
    return m;
  }

  bool operator==(const DenseMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using Matrix = DenseMatrix<Rational>;
using IntMatrix = DenseMatrix<Integer>;

template <class T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product: shape mismatch");
  DenseMatrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  }
  return c;
}

template <class T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<T> y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[i] += a(i, j) * x[j];
    }
  }
  return y;
}

Matrix to_rational(const IntMatrix& m);
Vec mul(const IntMatrix& a, const Vec& x);

struct Rref {
  Matrix form;
  std::vector<std::size_t> pivots;
};

// Unique reduced row-echelon form; zero rows kept at the bottom.
Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);
Rational determinant(const Matrix& m);
Integer determinant(const IntMatrix& m);

// Solution of a·x = b with every non-pivot coordinate zero; nullopt when inconsistent.
std::optional<Vec> solve_particular(const Matrix& a, const Vec& b);
// Right inverse X of a full-row-rank matrix (a·X = I), X = aᵀ(a·aᵀ)⁻¹.
Matrix right_inverse(const Matrix& a);
Matrix inverse(const Matrix& a);

class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  static Subspace span(const Matrix& rows);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& other) const;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace kernel_basis(const Matrix& m);
// Throws std::invalid_argument when ambient dimensions differ.
bool subspace_equal(const Subspace& a, const Subspace& b);
Subspace annihilator(const Subspace& u);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);

struct InfeasibleLift : std::domain_error {
  using std::domain_error::domain_error;
};

// Block-diagonal lift. f[λ] maps U_λ to V_λ; relations holds one row per Λ-relation with one
// scalar per block (Σ_λ c_λ v_λ = 0). Returns u with f[λ]·u[λ] = v[λ] satisfying the same
// relations; free blocks take the particular solution with zero non-pivot coordinates.
std::vector<Vec> lambda_diagonal_lift(const std::vector<Matrix>& f, const std::vector<Vec>& v,
                                      const Matrix& relations);

// Same lift with relations given as rows over the concatenated U coordinates. The joint system
// is solved at once with zero non-pivot coordinates.
std::vector<Vec> lambda_diagonal_lift_coordinates(const std::vector<Matrix>& f,
                                                  const std::vector<Vec>& v,
                                                  const Matrix& coordinate_relations);

}  // namespace arrangeval
