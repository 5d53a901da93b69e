#include "arrangeval/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace arrangeval {

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) s.emplace_back(i, v[i]);
  }
  return s;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec d(n);
  for (const auto& [i, x] : v) d.at(i) = x;
  return d;
}

void axpy(SparseVec& y, const Rational& f, const SparseVec& x) {
  if (f == 0 || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  std::size_t a = 0, b = 0;
  while (a < y.size() || b < x.size()) {
    if (b == x.size() || (a < y.size() && y[a].first < x[b].first)) {
      out.push_back(std::move(y[a++]));
    } else if (a == y.size() || x[b].first < y[a].first) {
      out.emplace_back(x[b].first, f * x[b].second);
      ++b;
    } else {
      Rational s = y[a].second + f * x[b].second;
      if (s != 0) out.emplace_back(y[a].first, std::move(s));
      ++a;
      ++b;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Rational& f) {
  SparseVec r;
  if (f == 0) return r;
  r.reserve(x.size());
  for (const auto& [i, v] : x) r.emplace_back(i, v * f);
  return r;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), building_(rows) {}

void SparseMatrix::add(std::size_t row, std::size_t col, const Rational& value) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("SparseMatrix::add");
  if (building_.empty()) throw std::logic_error("SparseMatrix::add after finalize");
  building_[row][col] += value;
}

void SparseMatrix::finalize() {
  row_data_.assign(rows_, {});
  col_data_.assign(cols_, {});
  for (std::size_t i = 0; i < building_.size(); ++i) {
    for (auto& [j, v] : building_[i]) {
      if (v == 0) continue;
      row_data_[i].emplace_back(j, v);
      col_data_[j].emplace_back(i, v);
    }
  }
  building_.clear();
}

Vec SparseMatrix::apply(const Vec& x) const {
  if (x.size() != cols_) throw std::invalid_argument("SparseMatrix::apply: shape mismatch");
  Vec y(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (const auto& [j, v] : row_data_[i]) {
      if (x[j] != 0) y[i] += v * x[j];
    }
  }
  return y;
}

SparseVec SparseMatrix::apply(const SparseVec& x) const {
  std::map<std::size_t, Rational> acc;
  for (const auto& [j, xv] : x) {
    for (const auto& [i, v] : col_data_.at(j)) acc[i] += v * xv;
  }
  SparseVec y;
  for (auto& [i, v] : acc) {
    if (v != 0) y.emplace_back(i, std::move(v));
  }
  return y;
}

Vec SparseMatrix::apply_transpose(const Vec& x) const {
  if (x.size() != rows_) throw std::invalid_argument("apply_transpose: shape mismatch");
  Vec y(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (x[i] == 0) continue;
    for (const auto& [j, v] : row_data_[i]) y[j] += v * x[i];
  }
  return y;
}

std::optional<SparseVec> EchelonBasis::insert(SparseVec vec, SparseVec tag) {
  while (!vec.empty()) {
    auto it = lead_.find(vec.front().first);
    if (it == lead_.end()) break;
    const Entry& p = rows_[it->second];
    const Rational f = -vec.front().second / p.vec.front().second;
    axpy(vec, f, p.vec);
    axpy(tag, f, p.tag);
  }
  if (vec.empty()) return tag;
  lead_[vec.front().first] = rows_.size();
  rows_.push_back({std::move(vec), std::move(tag)});
  return std::nullopt;
}

std::optional<Vec> sparse_solve(const std::vector<SparseVec>& rows, const Vec& rhs,
                                std::size_t cols) {
  if (rows.size() != rhs.size()) throw std::invalid_argument("sparse_solve: shape mismatch");
  EchelonBasis basis;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    SparseVec tag;
    if (rhs[i] != 0) tag.emplace_back(0, rhs[i]);
    auto dep = basis.insert(rows[i], tag);
    if (dep && !dep->empty()) return std::nullopt;
  }
  std::vector<const EchelonBasis::Entry*> order;
  for (const auto& e : basis.rows()) order.push_back(&e);
  std::sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    return a->vec.front().first > b->vec.front().first;
  });
  Vec x(cols);
  for (const auto* e : order) {
    Rational s = e->tag.empty() ? Rational(0) : e->tag.front().second;
    for (std::size_t k = 1; k < e->vec.size(); ++k) s -= e->vec[k].second * x[e->vec[k].first];
    x[e->vec.front().first] = s / e->vec.front().second;
  }
  return x;
}

std::size_t sparse_rank(const std::vector<SparseVec>& rows) {
  EchelonBasis basis;
  for (const auto& r : rows) basis.insert(r, {});
  return basis.rank();
}

}  // namespace arrangeval
