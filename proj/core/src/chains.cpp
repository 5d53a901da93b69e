#include "arrangeval/chains.hpp"

#include <stdexcept>

#include "arrangeval/affine.hpp"

namespace arrangeval {

ElementaryChain zero_chain(const ArrangementComplex& c, std::size_t k) {
  return {k, Vec(c.layout(k).size())};
}

Vec indicator_chain(const ArrangementComplex& c, const Polytope& p) {
  Vec out(c.top_cells());
  if (p.empty()) return out;
  if (p.ambient_dim() != c.n()) throw std::invalid_argument("indicator_chain: dimension mismatch");
  face_flats(p, c.poset());
  const std::size_t n = c.n();
  Vec lo = p.vertices()[0], hi = p.vertices()[0];
  for (const auto& v : p.vertices()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (v[i] < lo[i]) lo[i] = v[i];
      if (hi[i] < v[i]) hi[i] = v[i];
    }
  }
  for (std::size_t ci = 0; ci < out.size(); ++ci) {
    const Vec& q = c.cells(0)[ci].point;
    if (c.space() == Space::Affine) {
      out[ci] = p.contains(q) ? 1 : 0;
      continue;
    }
    std::vector<Integer> zlo(n), zhi(n);
    bool empty = false;
    for (std::size_t i = 0; i < n; ++i) {
      zlo[i] = -floor_of(q[i] - lo[i]);
      zhi[i] = floor_of(hi[i] - q[i]);
      if (zlo[i] > zhi[i]) empty = true;
    }
    if (empty) continue;
    std::vector<Integer> z = zlo;
    Integer count = 0;
    while (true) {
      Vec x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = q[i] + Rational(z[i]);
      if (p.contains(x)) ++count;
      std::size_t i = n;
      while (i > 0 && z[i - 1] == zhi[i - 1]) {
        z[i - 1] = zlo[i - 1];
        --i;
      }
      if (i == 0) break;
      ++z[i - 1];
    }
    out[ci] = Rational(count);
  }
  return out;
}

SparseMatrix leray_matrix(const ArrangementComplex& c, std::size_t k) {
  if (k >= c.n()) throw std::invalid_argument("leray_matrix: rank must be below n");
  const FlagLayout& src = c.layout(k);
  const FlagLayout& dst = c.layout(k + 1);
  SparseMatrix d(dst.size(), src.size());
  for (std::size_t i = 0; i < dst.flags.size(); ++i) {
    const Flag& f = dst.flags[i];
    const Flag head(f.begin(), f.end() - 1);
    const std::size_t fi = *src.find(head);
    const std::size_t ci = *c.poset().cover_between(head.back(), f.back());
    const Rational sigma = c.cover(ci).sign;
    const auto& walls = c.walls(ci);
    for (std::size_t j = 0; j < walls.size(); ++j) {
      d.add(dst.offset[i] + j, src.offset[fi] + walls[j].plus, sigma);
      d.add(dst.offset[i] + j, src.offset[fi] + walls[j].minus, -sigma);
    }
  }
  d.finalize();
  return d;
}

std::vector<SparseMatrix> leray_matrices(const ArrangementComplex& c) {
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k < c.n(); ++k) out.push_back(leray_matrix(c, k));
  return out;
}

ElementaryChain leray_D(const ArrangementComplex& c, const ElementaryChain& x) {
  if (x.rank > c.n()) throw std::invalid_argument("leray_D: rank exceeds n");
  if (x.values.size() != c.layout(x.rank).size()) throw std::invalid_argument("leray_D: wrong length");
  if (x.rank == c.n()) return {x.rank + 1, Vec{}};
  return {x.rank + 1, leray_matrix(c, x.rank).apply(x.values)};
}

ElementaryChain leray_power(const ArrangementComplex& c, const Vec& v, std::size_t k) {
  ElementaryChain x{0, v};
  for (std::size_t i = 0; i < k; ++i) x = leray_D(c, x);
  return x;
}

Vec iota_regroup(const ArrangementComplex& c, std::size_t l, const Vec& values, Regroup) {
  if (l == 0 || l > c.n()) throw std::invalid_argument("iota_regroup: rank out of range");
  const FlagLayout& layout = c.layout(l);
  if (values.size() != layout.size()) throw std::invalid_argument("iota_regroup: wrong length");
  Vec out = values;
  for (std::size_t i = 0; i < layout.flags.size(); ++i) {
    const Flag& f = layout.flags[i];
    const auto ci = c.poset().cover_between(f[l - 1], f[l]);
    if (!ci) throw std::logic_error("iota_regroup: flag without cover");
    if (c.cover(*ci).sign > 0) continue;
    for (std::size_t j = layout.offset[i]; j < layout.offset[i + 1]; ++j) out[j] = -out[j];
  }
  return out;
}

ElementaryChain flag_embed(const ArrangementComplex& c, const FlagFunction& f) {
  const FlagLayout& layout = c.layout(f.rank);
  if (f.values.size() != layout.flags.size()) throw std::invalid_argument("flag_embed: wrong length");
  ElementaryChain x = zero_chain(c, f.rank);
  for (std::size_t i = 0; i < layout.flags.size(); ++i) {
    for (std::size_t j = layout.offset[i]; j < layout.offset[i + 1]; ++j) x.values[j] = f.values[i];
  }
  return x;
}

std::optional<FlagFunction> flag_values(const ArrangementComplex& c, const ElementaryChain& x) {
  const FlagLayout& layout = c.layout(x.rank);
  FlagFunction f{x.rank, Vec(layout.flags.size())};
  for (std::size_t i = 0; i < layout.flags.size(); ++i) {
    f.values[i] = x.values[layout.offset[i]];
    for (std::size_t j = layout.offset[i]; j < layout.offset[i + 1]; ++j) {
      if (x.values[j] != f.values[i]) return std::nullopt;
    }
  }
  return f;
}

FiltrationReport degree_filtration(const ArrangementComplex& c) {
  const std::size_t n = c.n();
  const std::size_t dim = c.top_cells();
  const auto d = leray_matrices(c);
  struct Active {
    SparseVec chain;  // in V
    SparseVec image;  // Dᵏ chain in Eᵏ
  };
  std::vector<Active> active;
  for (std::size_t i = 0; i < dim; ++i) {
    SparseVec e{{i, Rational(1)}};
    active.push_back({e, e});
  }
  FiltrationReport r;
  r.dim_v = dim;
  std::vector<Vec> lower;
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Active> kernel;
    std::vector<Active> next;
    if (k == n) {
      kernel = std::move(active);
    } else {
      EchelonBasis eb;
      for (std::size_t i = 0; i < active.size(); ++i) {
        auto dep = eb.insert(d[k].apply(active[i].image), SparseVec{{i, Rational(1)}});
        if (!dep) continue;
        Active a;
        for (const auto& [j, lambda] : *dep) {
          axpy(a.chain, lambda, active[j].chain);
          axpy(a.image, lambda, active[j].image);
        }
        kernel.push_back(std::move(a));
      }
      for (const auto& row : eb.rows()) {
        Active a;
        for (const auto& [j, lambda] : row.tag) axpy(a.chain, lambda, active[j].chain);
        a.image = row.vec;
        next.push_back(std::move(a));
      }
    }
    const FlagLayout& layout = c.layout(k);
    std::vector<Vec> values;
    std::vector<Vec> lifts;
    for (const auto& a : kernel) {
      const Vec img = to_dense(a.image, layout.size());
      Vec f(layout.flags.size());
      for (std::size_t i = 0; i < layout.flags.size(); ++i) f[i] = img[layout.offset[i]];
      values.push_back(std::move(f));
      lifts.push_back(to_dense(a.chain, dim));
      lower.push_back(lifts.back());
    }
    r.dims.push_back(kernel.size());
    r.dims_le.push_back(lower.size());
    r.quotients.push_back(Subspace::span(layout.flags.size(), values));
    r.quotient_images.push_back(std::move(values));
    r.lower.push_back(Subspace::span(dim, lower));
    r.quotient_lifts.push_back(std::move(lifts));
    active = std::move(next);
  }
  return r;
}

}  // namespace arrangeval
