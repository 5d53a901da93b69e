#include "arrangeval/lattice.hpp"

#include <algorithm>

namespace arrangeval {

namespace {

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (m(src, j) != 0) m(dst, j) -= f * m(src, j);
  }
}

void col_axpy(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (m(i, src) != 0) m(i, dst) -= f * m(i, src);
  }
}

void negate_row(IntMatrix& m, std::size_t r) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

}  // namespace

Smith smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  Smith s{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
  IntMatrix& d = s.D;
  const std::size_t steps = std::min(m, n);
  for (std::size_t t = 0; t < steps; ++t) {
    bool found = false;
    while (true) {
      std::size_t bi = m, bj = n;
      for (std::size_t i = t; i < m; ++i) {
        for (std::size_t j = t; j < n; ++j) {
          if (d(i, j) == 0) continue;
          if (bi == m || abs(d(i, j)) < abs(d(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == m) break;
      found = true;
      d.swap_rows(t, bi);
      s.U.swap_rows(t, bi);
      d.swap_cols(t, bj);
      s.V.swap_cols(t, bj);
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = floor_div(d(i, t), d(t, t));
        row_axpy(d, i, t, q);
        row_axpy(s.U, i, t, q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = floor_div(d(t, j), d(t, t));
        col_axpy(d, j, t, q);
        col_axpy(s.V, j, t, q);
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      bool divisible = true;
      for (std::size_t i = t + 1; i < m && divisible; ++i) {
        for (std::size_t j = t + 1; j < n; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_axpy(d, t, i, -1);
            row_axpy(s.U, t, i, -1);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (!found) break;
    if (d(t, t) < 0) {
      negate_row(d, t);
      negate_row(s.U, t);
    }
    ++s.rank;
  }
  return s;
}

IntMatrix hermite_normal_form(const IntMatrix& a) {
  IntMatrix h = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    bool any = false;
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, c) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
      }
      if (best == h.rows()) break;
      any = true;
      h.swap_rows(r, best);
      bool clean = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, c) == 0) continue;
        row_axpy(h, i, r, floor_div(h(i, c), h(r, c)));
        if (h(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!any) continue;
    if (h(r, c) < 0) negate_row(h, r);
    for (std::size_t i = 0; i < r; ++i) row_axpy(h, i, r, floor_div(h(i, c), h(r, c)));
    ++r;
  }
  return h.submatrix_rows(0, r);
}

IntMatrix integer_kernel(const IntMatrix& a) {
  const std::size_t n = a.cols();
  Smith s = smith_normal_form(a);
  const std::size_t k = n - s.rank;
  if (k == 0) return IntMatrix(n, 0);
  IntMatrix basis_rows(k, n);
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t i = 0; i < n; ++i) basis_rows(j, i) = s.V(i, s.rank + j);
  }
  return hermite_normal_form(basis_rows).transpose();
}

IntMatrix saturate(const IntMatrix& rows) {
  const std::size_t n = rows.cols();
  if (rows.rows() == 0) return IntMatrix(0, n);
  IntMatrix k = integer_kernel(rows);
  if (k.cols() == 0) return IntMatrix::identity(n);
  IntMatrix s = integer_kernel(k.transpose());
  return hermite_normal_form(s.transpose());
}

IntMatrix stack_rows(const IntMatrix& top, const IntVec& row) {
  IntMatrix m(top.rows() + 1, row.size());
  for (std::size_t i = 0; i < top.rows(); ++i) {
    for (std::size_t j = 0; j < row.size(); ++j) m(i, j) = top(i, j);
  }
  for (std::size_t j = 0; j < row.size(); ++j) m(top.rows(), j) = row[j];
  return m;
}

}  // namespace arrangeval
