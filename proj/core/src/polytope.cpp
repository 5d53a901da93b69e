#include "arrangeval/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace arrangeval {

namespace {

// Calls fn on every k-subset of {0,…,n−1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t normal_rank(const std::vector<Halfspace>& cs, const std::vector<std::size_t>& which,
                        std::size_t m) {
  Matrix a(which.size(), m);
  for (std::size_t i = 0; i < which.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) a(i, j) = cs[which[i]].normal[j];
  }
  return rank(a);
}

std::vector<std::size_t> intersect_sorted(const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
  std::vector<std::size_t> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

}  // namespace

bool lex_less(const Vec& a, const Vec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Vec vertex_average(const std::vector<Vec>& points) {
  if (points.empty()) throw std::invalid_argument("vertex_average: no points");
  Vec s(points[0].size());
  for (const auto& p : points) s = add(s, p);
  return scale(s, Rational(1, points.size()));
}

ConvexPiece ConvexPiece::box(const Vec& lo, const Vec& hi) {
  const std::size_t m = lo.size();
  ConvexPiece p;
  p.dim_ = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (!(lo[i] < hi[i])) throw std::invalid_argument("box: empty range");
    Vec up(m), down(m);
    up[i] = 1;
    down[i] = -1;
    p.constraints_.push_back({up, hi[i]});
    p.constraints_.push_back({down, -lo[i]});
  }
  const std::size_t corners = std::size_t{1} << m;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    Vec v(m);
    std::vector<std::size_t> t;
    for (std::size_t i = 0; i < m; ++i) {
      const bool high = (mask >> i) & 1U;
      v[i] = high ? hi[i] : lo[i];
      t.push_back(2 * i + (high ? 0 : 1));
    }
    std::sort(t.begin(), t.end());
    p.vertices_.push_back(std::move(v));
    p.tight_.push_back(std::move(t));
  }
  return p;
}

Vec ConvexPiece::vertex_average() const { return arrangeval::vertex_average(vertices_); }

bool ConvexPiece::touches(std::size_t c) const {
  for (const auto& t : tight_) {
    if (std::binary_search(t.begin(), t.end(), c)) return true;
  }
  return false;
}

std::pair<std::optional<ConvexPiece>, std::optional<ConvexPiece>> ConvexPiece::split(
    const Vec& normal, const Rational& offset) const {
  std::vector<Rational> s(vertices_.size());
  bool neg = false, pos = false;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    s[i] = dot(normal, vertices_[i]) - offset;
    if (s[i] < 0) neg = true;
    if (s[i] > 0) pos = true;
  }
  if (!pos) return {*this, std::nullopt};
  if (!neg) return {std::nullopt, *this};

  const std::size_t c = constraints_.size();
  ConvexPiece lo, hi;
  lo.dim_ = hi.dim_ = dim_;
  lo.constraints_ = hi.constraints_ = constraints_;
  lo.constraints_.push_back({normal, offset});
  hi.constraints_.push_back({scale(normal, -1), -offset});

  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (s[i] <= 0) {
      lo.vertices_.push_back(vertices_[i]);
      auto t = tight_[i];
      if (s[i] == 0) t.push_back(c);
      lo.tight_.push_back(std::move(t));
    }
    if (s[i] >= 0) {
      hi.vertices_.push_back(vertices_[i]);
      auto t = tight_[i];
      if (s[i] == 0) t.push_back(c);
      hi.tight_.push_back(std::move(t));
    }
  }
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (s[i] >= 0) continue;
    for (std::size_t j = 0; j < vertices_.size(); ++j) {
      if (s[j] <= 0) continue;
      auto common = intersect_sorted(tight_[i], tight_[j]);
      if (common.size() + 1 < dim_) continue;
      if (normal_rank(constraints_, common, dim_) != dim_ - 1) continue;
      const Rational lambda = s[i] / (s[i] - s[j]);
      Vec x = add(vertices_[i], scale(sub(vertices_[j], vertices_[i]), lambda));
      common.push_back(c);
      lo.vertices_.push_back(x);
      lo.tight_.push_back(common);
      hi.vertices_.push_back(std::move(x));
      hi.tight_.push_back(std::move(common));
    }
  }
  return {std::move(lo), std::move(hi)};
}

std::vector<Vec> hpoly_vertices(const std::vector<Halfspace>& constraints, std::size_t m) {
  std::vector<Vec> out;
  auto feasible = [&](const Vec& x) {
    for (const auto& h : constraints) {
      if (dot(h.normal, x) > h.offset) return false;
    }
    return true;
  };
  if (m == 0) {
    if (feasible(Vec{})) out.push_back(Vec{});
    return out;
  }
  for_each_subset(constraints.size(), m, [&](const std::vector<std::size_t>& idx) {
    Matrix a(m, m);
    Vec b(m);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) a(i, j) = constraints[idx[i]].normal[j];
      b[i] = constraints[idx[i]].offset;
    }
    if (rank(a) != m) return;
    auto x = solve_particular(a, b);
    if (x && feasible(*x)) out.push_back(std::move(*x));
  });
  std::sort(out.begin(), out.end(), lex_less);
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::optional<Vec> fm_feasible(const std::vector<LinearConstraint>& constraints, std::size_t m) {
  // stages[k] holds the system in the variables x_0 … x_{k−1}.
  std::vector<std::vector<LinearConstraint>> stages(m + 1);
  stages[m] = constraints;
  for (std::size_t k = m; k > 0; --k) {
    const std::size_t j = k - 1;
    std::vector<LinearConstraint> lower, upper, rest;
    for (const auto& c : stages[k]) {
      if (c.a[j] > 0) upper.push_back(c);
      else if (c.a[j] < 0) lower.push_back(c);
      else rest.push_back(c);
    }
    for (const auto& u : upper) {
      for (const auto& l : lower) {
        const Rational fu = 1 / u.a[j];
        const Rational fl = -1 / l.a[j];
        LinearConstraint c{Vec(u.a.size()), u.b * fu + l.b * fl, u.strict || l.strict};
        for (std::size_t i = 0; i < u.a.size(); ++i) c.a[i] = u.a[i] * fu + l.a[i] * fl;
        c.a[j] = 0;
        rest.push_back(std::move(c));
      }
    }
    // Drop exact duplicates to limit growth.
    std::map<std::pair<std::string, bool>, LinearConstraint> uniq;
    for (auto& c : rest) uniq.emplace(std::make_pair(to_string(c.a) + "|" + to_string(c.b), c.strict), c);
    stages[j].clear();
    for (auto& [key, c] : uniq) stages[j].push_back(std::move(c));
  }
  for (const auto& c : stages[0]) {
    if (c.strict ? !(0 < c.b) : !(0 <= c.b)) return std::nullopt;
  }
  Vec x(m);
  for (std::size_t k = 1; k <= m; ++k) {
    const std::size_t j = k - 1;
    std::optional<Rational> lo, hi;
    bool lo_strict = false, hi_strict = false;
    for (const auto& c : stages[k]) {
      if (c.a[j] == 0) continue;
      Rational rhs = c.b;
      for (std::size_t i = 0; i < j; ++i) rhs -= c.a[i] * x[i];
      const Rational bound = rhs / c.a[j];
      if (c.a[j] > 0) {
        if (!hi || bound < *hi || (bound == *hi && c.strict)) {
          hi_strict = (hi && bound == *hi) ? (hi_strict || c.strict) : c.strict;
          hi = bound;
        }
      } else {
        if (!lo || bound > *lo || (bound == *lo && c.strict)) {
          lo_strict = (lo && bound == *lo) ? (lo_strict || c.strict) : c.strict;
          lo = bound;
        }
      }
    }
    if (lo && hi) {
      x[j] = (*lo == *hi) ? *lo : (*lo + *hi) / 2;
      if (*lo == *hi && (lo_strict || hi_strict)) return std::nullopt;
    } else if (lo) {
      x[j] = *lo + 1;
    } else if (hi) {
      x[j] = *hi - 1;
    } else {
      x[j] = 0;
    }
  }
  return x;
}

std::size_t affine_rank(const std::vector<Vec>& points) {
  if (points.size() <= 1) return 0;
  Matrix d(points.size() - 1, points[0].size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    for (std::size_t j = 0; j < points[0].size(); ++j) d(i - 1, j) = points[i][j] - points[0][j];
  }
  return rank(d);
}

FaceLattice face_lattice(const std::vector<Vec>& input) {
  if (input.empty()) throw std::invalid_argument("face_lattice: no points");
  std::vector<Vec> pts = input;
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  const std::size_t m = pts[0].size();
  FaceLattice fl;
  if (m == 0 || pts.size() == 1) {
    if (m != 0) throw std::invalid_argument("face_lattice: points do not span the space");
    fl.vertices = pts;
    fl.faces = {{0}};
    fl.face_dim = {0};
    return fl;
  }
  if (affine_rank(pts) != m) throw std::invalid_argument("face_lattice: points do not span the space");

  std::map<std::vector<std::size_t>, Halfspace> facet_map;
  for_each_subset(pts.size(), m, [&](const std::vector<std::size_t>& idx) {
    Matrix d(m - 1, m);
    for (std::size_t i = 1; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) d(i - 1, j) = pts[idx[i]][j] - pts[idx[0]][j];
    }
    Subspace k = kernel_basis(d);
    if (k.dim() != 1) return;
    IntVec nrm = primitive_integer(k.basis_vector(0));
    Vec normal = to_rational(nrm);
    Rational off = dot(normal, pts[idx[0]]);
    bool pos = false, neg = false;
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const Rational s = dot(normal, pts[i]) - off;
      if (s > 0) pos = true;
      if (s < 0) neg = true;
      if (s == 0) tight.push_back(i);
    }
    if (pos && neg) return;
    if (pos) {
      normal = scale(normal, -1);
      off = -off;
    }
    facet_map.emplace(tight, Halfspace{normal, off});
  });

  std::vector<std::vector<std::size_t>> faces;
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::size_t> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = i;
  faces.push_back(all);
  seen.insert(all);
  for (const auto& [t, h] : facet_map) {
    if (seen.insert(t).second) faces.push_back(t);
  }
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (const auto& [t, h] : facet_map) {
      auto inter = intersect_sorted(faces[i], t);
      if (!inter.empty() && seen.insert(inter).second) faces.push_back(inter);
    }
  }

  std::vector<Vec> extreme;
  for (const auto& f : faces) {
    if (f.size() == 1) extreme.push_back(pts[f[0]]);
  }
  if (extreme.size() != pts.size()) return face_lattice(extreme);

  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keyed;
  for (const auto& f : faces) {
    std::vector<Vec> sub;
    for (auto i : f) sub.push_back(pts[i]);
    keyed.emplace_back(affine_rank(sub), f);
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  fl.vertices = pts;
  for (auto& [d, f] : keyed) {
    fl.face_dim.push_back(d);
    fl.faces.push_back(f);
  }
  for (const auto& [t, h] : facet_map) {
    fl.facets.push_back(h);
    auto it = std::find(fl.faces.begin(), fl.faces.end(), t);
    fl.facet_face.push_back(static_cast<std::size_t>(it - fl.faces.begin()));
  }
  return fl;
}

std::vector<std::vector<Vec>> pulling_triangulation(const std::vector<Vec>& points) {
  FaceLattice fl = face_lattice(points);
  std::map<std::size_t, std::vector<std::vector<std::size_t>>> memo;
  std::function<const std::vector<std::vector<std::size_t>>&(std::size_t)> tri =
      [&](std::size_t f) -> const std::vector<std::vector<std::size_t>>& {
    auto it = memo.find(f);
    if (it != memo.end()) return it->second;
    std::vector<std::vector<std::size_t>> out;
    const auto& verts = fl.faces[f];
    if (fl.face_dim[f] == 0) {
      out.push_back({verts[0]});
    } else {
      const std::size_t apex = verts[0];
      for (std::size_t g = 0; g < fl.faces.size(); ++g) {
        if (fl.face_dim[g] + 1 != fl.face_dim[f]) continue;
        const auto& gv = fl.faces[g];
        if (!std::includes(verts.begin(), verts.end(), gv.begin(), gv.end())) continue;
        if (std::binary_search(gv.begin(), gv.end(), apex)) continue;
        for (const auto& s : tri(g)) {
          std::vector<std::size_t> simplex{apex};
          simplex.insert(simplex.end(), s.begin(), s.end());
          out.push_back(std::move(simplex));
        }
      }
    }
    return memo.emplace(f, std::move(out)).first->second;
  };
  std::vector<std::vector<Vec>> result;
  for (const auto& s : tri(0)) {
    std::vector<Vec> simplex;
    for (auto i : s) simplex.push_back(fl.vertices[i]);
    result.push_back(std::move(simplex));
  }
  return result;
}

Rational simplex_volume(const std::vector<Vec>& simplex) {
  const std::size_t m = simplex.size() - 1;
  if (m == 0) return 1;
  Matrix d(m, m);
  Integer fact = 1;
  for (std::size_t i = 1; i <= m; ++i) {
    fact *= static_cast<unsigned long>(i);
    for (std::size_t j = 0; j < m; ++j) d(i - 1, j) = simplex[i][j] - simplex[0][j];
  }
  return abs(determinant(d)) / Rational(fact);
}

Rational hull_volume(const std::vector<Vec>& points) {
  Rational v = 0;
  for (const auto& s : pulling_triangulation(points)) v += simplex_volume(s);
  return v;
}

Polytope Polytope::from_vertices(const std::vector<Vec>& points) {
  if (points.empty()) return Polytope{};
  Polytope p;
  p.dim_ = points[0].size();
  for (const auto& v : points) {
    if (v.size() != p.dim_) throw std::invalid_argument("polytope: inconsistent vertex length");
  }
  p.lattice_ = face_lattice(points);
  return p;
}

bool Polytope::contains(const Vec& x) const {
  for (const auto& h : lattice_.facets) {
    if (dot(h.normal, x) > h.offset) return false;
  }
  return !empty();
}

bool Polytope::contains_strictly(const Vec& x) const {
  for (const auto& h : lattice_.facets) {
    if (dot(h.normal, x) >= h.offset) return false;
  }
  return !empty();
}

Polytope Polytope::translated(const Vec& v) const {
  std::vector<Vec> pts;
  for (const auto& x : lattice_.vertices) pts.push_back(add(x, v));
  return from_vertices(pts);
}

Polytope Polytope::scaled(const Rational& s) const {
  std::vector<Vec> pts;
  for (const auto& x : lattice_.vertices) pts.push_back(scale(x, s));
  return from_vertices(pts);
}

Vec Polytope::barycenter_of_face(std::size_t face) const {
  std::vector<Vec> pts;
  for (auto i : lattice_.faces.at(face)) pts.push_back(lattice_.vertices[i]);
  return vertex_average(pts);
}

}  // namespace arrangeval
