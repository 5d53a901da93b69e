#include "arrangeval/constraints.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "arrangeval/toric.hpp"

namespace arrangeval {

std::vector<ConstraintRow> reciprocity_system(const ArrangementComplex& c, std::size_t k) {
  std::vector<ConstraintRow> rows;
  if (k < 2) return rows;
  const FlagLayout& layout = c.layout(k);
  std::map<std::pair<std::size_t, Flag>, std::size_t> by_anchor;
  for (std::size_t m = 1; m < k; ++m) {
    for (std::size_t i = 0; i < layout.flags.size(); ++i) {
      Flag anchor = layout.flags[i];
      anchor.erase(anchor.begin() + static_cast<std::ptrdiff_t>(m));
      auto [it, inserted] = by_anchor.emplace(std::make_pair(m, anchor), rows.size());
      if (inserted) {
        ConstraintRow r;
        r.kind = RowKind::Reciprocity;
        r.type = m;
        r.anchor = std::move(anchor);
        rows.push_back(std::move(r));
      }
      rows[it->second].coefficients.emplace_back(i, Rational(1));
    }
  }
  return rows;
}

std::vector<ConstraintRow> period_system(const ArrangementComplex& c, std::size_t k) {
  std::vector<ConstraintRow> rows;
  if (k < 1 || k > c.n()) return rows;
  const FlagLayout& lower = c.layout(k - 1);
  const FlagLayout& layout = c.layout(k);
  for (const auto& anchor : lower.flags) {
    const std::size_t base = anchor.back();
    const auto& loops = c.loops(base);
    for (std::size_t li = 0; li < loops.size(); ++li) {
      ConstraintRow r;
      r.kind = RowKind::Period;
      r.anchor = anchor;
      r.loop = li;
      for (auto ci : c.children(base)) {
        const int index = intersection_index(loops[li], ci);
        if (index == 0) continue;
        Flag f = anchor;
        f.push_back(c.cover(ci).child);
        r.coefficients.emplace_back(*layout.find(f), Rational(index * c.cover(ci).sign));
      }
      std::sort(r.coefficients.begin(), r.coefficients.end());
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

Matrix constraint_matrix(const std::vector<ConstraintRow>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (const auto& [j, v] : rows[i].coefficients) m(i, j) += v;
  }
  return m;
}

Subspace solution_space(const ArrangementComplex& c, std::size_t k, bool include_periods) {
  auto rows = reciprocity_system(c, k);
  if (include_periods) {
    auto p = period_system(c, k);
    rows.insert(rows.end(), p.begin(), p.end());
  }
  return kernel_basis(constraint_matrix(rows, c.layout(k).flags.size()));
}

bool cocycle_check(const ArrangementComplex& c, const ElementaryChain& x) {
  const std::size_t k = x.rank;
  if (k == 0) return true;
  const FlagLayout& layout = c.layout(k);
  const Vec walls = iota_regroup(c, k, x.values, Regroup::Backward);
  for (const auto& anchor : c.layout(k - 1).flags) {
    const std::size_t l = anchor.back();
    const Flat& lf = c.flat(l);
    std::map<std::size_t, std::vector<std::size_t>> through;  // grandchild → children containing it
    for (auto ci : c.children(l)) {
      const std::size_t m = c.cover(ci).child;
      for (auto gi : c.children(m)) {
        const std::size_t g = c.cover(gi).child;
        if (c.flat(g).at_infinity) continue;
        through[g].push_back(ci);
      }
    }
    for (const auto& [g, kids] : through) {
      Matrix pair(2, lf.dim());
      std::size_t second = kids.size();
      for (std::size_t i = 1; i < kids.size() && second == kids.size(); ++i) {
        Matrix probe = Matrix::from_rows({to_rational(c.cover(kids[0]).conormal),
                                          to_rational(c.cover(kids[i]).conormal)}, lf.dim());
        if (rank(probe) == 2) {
          second = i;
          pair = probe;
        }
      }
      if (second == kids.size()) throw std::logic_error("cocycle_check: codimension-two flat on a single wall");
      const Matrix u = right_inverse(pair);
      for (const auto& cell : c.cells(g)) {
        Rational total = 0;
        for (auto ci : kids) {
          const Cover& cv = c.cover(ci);
          const Vec nm = Matrix::from_rows({to_rational(cv.conormal)}, lf.dim()).row(0);
          Vec n2(2);
          for (std::size_t a = 0; a < 2; ++a) {
            for (std::size_t b = 0; b < lf.dim(); ++b) n2[a] += nm[b] * u(b, a);
          }
          Flag f = anchor;
          f.push_back(cv.child);
          const std::size_t fi = *layout.find(f);
          for (int s : {1, -1}) {
            const Vec ray{Rational(-s) * n2[1], Rational(s) * n2[0]};
            const Vec tangent{-ray[1], ray[0]};
            const int orient = sign_of(dot(n2, tangent));
            const Vec dir_local = u * ray;
            const std::size_t wall = c.locate(cv.child, cell.point, tangent_to_ambient(lf, dir_local));
            total += Rational(orient) * walls[layout.offset[fi] + wall];
          }
        }
        if (total != 0) return false;
      }
    }
  }
  return true;
}

bool satisfies_reciprocity(const ArrangementComplex& c, const ElementaryChain& x, std::size_t m) {
  const std::size_t k = x.rank;
  if (m == 0 || m >= k) return true;
  const FlagLayout& layout = c.layout(k);
  std::map<Flag, Vec> sums;
  for (std::size_t i = 0; i < layout.flags.size(); ++i) {
    Flag anchor = layout.flags[i];
    anchor.erase(anchor.begin() + static_cast<std::ptrdiff_t>(m));
    Vec block(x.values.begin() + static_cast<std::ptrdiff_t>(layout.offset[i]),
              x.values.begin() + static_cast<std::ptrdiff_t>(layout.offset[i + 1]));
    auto [it, inserted] = sums.emplace(anchor, block);
    if (!inserted) it->second = add(it->second, block);
  }
  for (const auto& [a, s] : sums) {
    if (!is_zero(s)) return false;
  }
  return true;
}

bool VerificationReport::ok() const {
  for (const auto& c : checks) {
    if (!c.holds) return false;
  }
  return true;
}

namespace {

DescriptionCheck compare(std::size_t k, std::string name, const Subspace& expected,
                         const std::vector<ConstraintRow>& rows, std::size_t cols) {
  DescriptionCheck d;
  d.k = k;
  d.name = std::move(name);
  d.dim_flags = cols;
  d.rows = rows.size();
  const Subspace sol = kernel_basis(constraint_matrix(rows, cols));
  d.dim_solutions = sol.dim();
  d.dim_expected = expected.dim();
  d.holds = subspace_equal(expected, sol);
  return d;
}

std::vector<ConstraintRow> restrict_rows(const std::vector<ConstraintRow>& rows,
                                         const std::vector<std::optional<std::size_t>>& keep) {
  std::vector<ConstraintRow> out;
  for (const auto& r : rows) {
    ConstraintRow s = r;
    s.coefficients.clear();
    for (const auto& [j, v] : r.coefficients) {
      if (keep[j]) s.coefficients.emplace_back(*keep[j], v);
    }
    if (!s.coefficients.empty()) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

VerificationReport verify_descriptions(const ArrangementComplex& c, VerifyMode mode) {
  if (mode == VerifyMode::Toric && c.space() != Space::Toric) {
    throw std::invalid_argument("verify: toric mode needs a toric arrangement");
  }
  if (mode != VerifyMode::Toric && !c.sphere()) {
    throw std::invalid_argument("verify: affine modes need the sphere compactification");
  }
  VerificationReport r;
  r.mode = mode;
  r.filtration = degree_filtration(c);
  const std::size_t n = c.n();
  for (std::size_t k = 0; k <= n; ++k) {
    const std::size_t cols = c.layout(k).flags.size();
    auto rows = reciprocity_system(c, k);
    if (mode == VerifyMode::Toric) {
      auto p = period_system(c, k);
      rows.insert(rows.end(), p.begin(), p.end());
      r.checks.push_back(compare(k, "reciprocity+periods", r.filtration.quotients[k], rows, cols));
      continue;
    }
    if (k < n) {
      r.checks.push_back(compare(k, "reciprocity", r.filtration.quotients[k], rows, cols));
      continue;
    }
    auto all = rows;
    auto p = period_system(c, k);
    all.insert(all.end(), p.begin(), p.end());
    r.checks.push_back(compare(k, "first:reciprocity+periods", r.filtration.quotients[k], all, cols));

    const FlagLayout& layout = c.layout(k);
    std::vector<std::optional<std::size_t>> keep(cols);
    std::size_t finite = 0;
    for (std::size_t i = 0; i < cols; ++i) {
      if (c.finite(layout.flags[i])) keep[i] = finite++;
    }
    std::vector<Vec> projected;
    const Matrix qb = r.filtration.quotients[k].basis();
    for (std::size_t i = 0; i < qb.rows(); ++i) {
      Vec v(finite);
      for (std::size_t j = 0; j < cols; ++j) {
        if (keep[j]) v[*keep[j]] = qb(i, j);
      }
      projected.push_back(std::move(v));
    }
    const Subspace vn_finite = Subspace::span(finite, projected);
    const auto finite_rec = restrict_rows(rows, keep);
    DescriptionCheck second = compare(k, "second:finite-reciprocity", vn_finite, finite_rec, finite);
    second.holds = second.holds && vn_finite.dim() == r.filtration.quotients[k].dim();
    r.checks.push_back(second);

    if (mode != VerifyMode::AffineCompact) continue;
    std::vector<Vec> bounded;
    bool vanish_at_infinity = true;
    for (std::size_t ci = 0; ci < c.top_cells(); ++ci) {
      if (!c.cells(0)[ci].bounded) continue;
      Vec e(c.top_cells());
      e[ci] = 1;
      const ElementaryChain img = leray_power(c, e, k);
      Vec v(finite);
      for (std::size_t j = 0; j < cols; ++j) {
        const Rational val = img.values[layout.offset[j]];
        if (keep[j]) v[*keep[j]] = val;
        else if (val != 0) vanish_at_infinity = false;
      }
      bounded.push_back(std::move(v));
    }
    const Subspace vcb = Subspace::span(finite, bounded);
    r.bounded_dim = vcb.dim();
    auto finite_all = restrict_rows(all, keep);
    DescriptionCheck cb = compare(k, "bounded:reciprocity+periods", vcb, finite_all, finite);
    cb.holds = cb.holds && vanish_at_infinity;
    r.checks.push_back(cb);
    DescriptionCheck contain;
    contain.k = k;
    contain.name = "bounded-in-reciprocity";
    contain.dim_flags = finite;
    contain.rows = finite_rec.size();
    const Subspace rec_sol = kernel_basis(constraint_matrix(finite_rec, finite));
    contain.dim_solutions = rec_sol.dim();
    contain.dim_expected = vcb.dim();
    contain.holds = rec_sol.contains(vcb);
    r.checks.push_back(contain);
  }
  return r;
}

}  // namespace arrangeval
