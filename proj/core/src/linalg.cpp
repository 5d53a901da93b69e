#include "arrangeval/linalg.hpp"

namespace arrangeval {

Matrix to_rational(const IntMatrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  }
  return r;
}

Vec mul(const IntMatrix& a, const Vec& x) {
  if (a.cols() != x.size()) throw std::invalid_argument("mul: shape mismatch");
  Vec y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) y[i] += Rational(a(i, j)) * x[j];
    }
  }
  return y;
}

Rref rref(const Matrix& m) {
  Rref out{m, {}};
  Matrix& a = out.form;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(p, r);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) {
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      }
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  Matrix a = m;
  Rational det = 1;
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Integer determinant(const IntMatrix& m) {
  Rational d = determinant(to_rational(m));
  return d.get_num();
}

std::optional<Vec> solve_particular(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw std::invalid_argument("solve_particular: shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  Rref r = rref(aug);
  Vec x(a.cols());
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] == a.cols()) return std::nullopt;
    x[r.pivots[i]] = r.form(i, a.cols());
  }
  return x;
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  const std::size_t n = a.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  Rref r = rref(aug);
  if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) {
    throw std::domain_error("inverse: singular matrix");
  }
  return r.form.submatrix_cols(n, 2 * n);
}

Matrix right_inverse(const Matrix& a) {
  const Matrix at = a.transpose();
  return at * inverse(a * at);
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Matrix& rows) {
  Subspace s(rows.cols());
  Rref r = rref(rows);
  s.basis_ = r.form.submatrix_rows(0, r.pivots.size());
  s.pivots_ = r.pivots;
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  Matrix m(vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw std::invalid_argument("span: length mismatch");
    for (std::size_t j = 0; j < ambient_dim; ++j) m(i, j) = vectors[i][j];
  }
  return span(m);
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Matrix::identity(ambient_dim)); }

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("contains: length mismatch");
  Vec w = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const std::size_t p = pivots_[i];
    if (w[p] == 0) continue;
    const Rational f = w[p];
    for (std::size_t j = p; j < ambient_; ++j) {
      if (basis_(i, j) != 0) w[j] -= f * basis_(i, j);
    }
  }
  return is_zero(w);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel_basis(const Matrix& m) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> vecs;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.form(i, f);
    vecs.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), vecs);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw std::invalid_argument("subspace_equal: ambient dimension mismatch");
  }
  return a == b;
}

Subspace annihilator(const Subspace& u) {
  Matrix b = u.basis();
  if (b.rows() == 0) return Subspace::full(u.ambient_dim());
  return kernel_basis(b);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  Matrix m(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.dim(); ++i) m.append_row(a.basis_vector(i));
  for (std::size_t i = 0; i < b.dim(); ++i) m.append_row(b.basis_vector(i));
  return Subspace::span(m);
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

std::vector<Vec> lambda_diagonal_lift(const std::vector<Matrix>& f, const std::vector<Vec>& v,
                                      const Matrix& relations) {
  const std::size_t blocks = f.size();
  if (v.size() != blocks) throw std::invalid_argument("lambda_diagonal_lift: block count mismatch");
  if (relations.rows() > 0 && relations.cols() != blocks) {
    throw std::invalid_argument("lambda_diagonal_lift: relation width mismatch");
  }
  Matrix rel = relations.rows() > 0 ? relations : Matrix(0, blocks);
  Rref r = rref(rel);
  std::vector<bool> is_pivot(blocks, false);
  for (auto p : r.pivots) is_pivot[p] = true;

  std::vector<Vec> u(blocks);
  for (std::size_t l = 0; l < blocks; ++l) {
    if (is_pivot[l]) continue;
    auto sol = solve_particular(f[l], v[l]);
    if (!sol) throw InfeasibleLift("lambda_diagonal_lift: block map does not reach target");
    u[l] = std::move(*sol);
  }
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    const std::size_t l = r.pivots[i];
    u[l] = Vec(f[l].cols());
    for (std::size_t m = 0; m < blocks; ++m) {
      if (is_pivot[m] || r.form(i, m) == 0) continue;
      if (u[m].size() != u[l].size()) {
        throw InfeasibleLift("lambda_diagonal_lift: related blocks differ in dimension");
      }
      for (std::size_t j = 0; j < u[l].size(); ++j) u[l][j] -= r.form(i, m) * u[m][j];
    }
  }
  for (std::size_t l = 0; l < blocks; ++l) {
    if (f[l] * u[l] != v[l]) throw InfeasibleLift("lambda_diagonal_lift: target violates relations");
  }
  return u;
}

std::vector<Vec> lambda_diagonal_lift_coordinates(const std::vector<Matrix>& f,
                                                  const std::vector<Vec>& v,
                                                  const Matrix& coordinate_relations) {
  const std::size_t blocks = f.size();
  if (v.size() != blocks) throw std::invalid_argument("lambda_diagonal_lift: block count mismatch");
  std::vector<std::size_t> offset(blocks + 1, 0);
  std::size_t rows = 0;
  for (std::size_t l = 0; l < blocks; ++l) {
    offset[l + 1] = offset[l] + f[l].cols();
    rows += f[l].rows();
  }
  const std::size_t width = offset[blocks];
  if (coordinate_relations.rows() > 0 && coordinate_relations.cols() != width) {
    throw std::invalid_argument("lambda_diagonal_lift: relation width mismatch");
  }
  Matrix a(rows + coordinate_relations.rows(), width);
  Vec b(rows + coordinate_relations.rows());
  std::size_t r = 0;
  for (std::size_t l = 0; l < blocks; ++l) {
    for (std::size_t i = 0; i < f[l].rows(); ++i, ++r) {
      for (std::size_t j = 0; j < f[l].cols(); ++j) a(r, offset[l] + j) = f[l](i, j);
      b[r] = v[l][i];
    }
  }
  for (std::size_t i = 0; i < coordinate_relations.rows(); ++i, ++r) {
    for (std::size_t j = 0; j < width; ++j) a(r, j) = coordinate_relations(i, j);
  }
  auto sol = solve_particular(a, b);
  if (!sol) throw InfeasibleLift("lambda_diagonal_lift: joint system infeasible");
  std::vector<Vec> u(blocks);
  for (std::size_t l = 0; l < blocks; ++l) {
    u[l].assign(sol->begin() + static_cast<std::ptrdiff_t>(offset[l]),
                sol->begin() + static_cast<std::ptrdiff_t>(offset[l + 1]));
  }
  return u;
}

}  // namespace arrangeval
