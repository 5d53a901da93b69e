#include "arrangeval/flats.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arrangeval {

namespace {

Rational reduce_level(Space space, const Rational& q) {
  return space == Space::Toric ? frac_of(q) : q;
}

IntVec column_dot(const IntVec& a, const IntMatrix& b) {
  IntVec c(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) c[j] += a[i] * b(i, j);
  }
  return c;
}

int frame_sign(const IntMatrix& reference, const Vec& first, const Matrix& rest) {
  const std::size_t n = first.size();
  Matrix frame(n, rest.cols() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    frame(i, 0) = first[i];
    for (std::size_t j = 0; j < rest.cols(); ++j) frame(i, j + 1) = rest(i, j);
  }
  const int s = sign_of(determinant(to_rational(reference) * frame));
  if (s == 0) throw std::logic_error("flat poset: frame not transversal");
  return s;
}

}  // namespace

std::string flat_id(Space space, const IntMatrix& conormals, const Vec& levels) {
  std::ostringstream os;
  os << (space == Space::Toric ? "T" : "A") << "[";
  for (std::size_t i = 0; i < conormals.rows(); ++i) {
    if (i) os << ";";
    os << to_string(conormals.row(i)) << "=" << to_string(levels[i]);
  }
  os << "]";
  return os.str();
}

Flat make_flat(Space space, const IntMatrix& rows, const Vec& point) {
  const std::size_t n = point.size();
  Flat f;
  f.conormals = rows.rows() == 0 ? IntMatrix(0, n) : saturate(rows);
  f.codim = f.conormals.rows();
  const Matrix r = to_rational(f.conormals);
  f.levels = r * point;
  for (auto& y : f.levels) y = reduce_level(space, y);
  f.id = flat_id(space, f.conormals, f.levels);
  if (f.codim == 0) {
    f.base_point = Vec(n);
  } else {
    auto p = solve_particular(r, f.levels);
    if (!p) throw std::logic_error("make_flat: inconsistent levels");
    f.base_point = *p;
    if (space == Space::Toric) {
      for (auto& x : f.base_point) x = frac_of(x);
    }
  }
  f.direction = integer_kernel(f.conormals);
  if (f.codim == 0) {
    f.frame = Matrix(n, 0);
    f.integral_frame = IntMatrix(n, 0);
  } else {
    f.frame = right_inverse(r);
    Smith s = smith_normal_form(f.conormals);
    IntMatrix head(n, f.codim);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < f.codim; ++j) head(i, j) = s.V(i, j);
    }
    f.integral_frame = head * s.U;
    if (f.conormals * f.integral_frame != IntMatrix::identity(f.codim)) {
      throw std::logic_error("make_flat: conormal lattice not saturated");
    }
  }
  return f;
}

Vec to_local(Space space, const Flat& flat, const Vec& x) {
  if (flat.at_infinity) return Vec{};
  Vec d = sub(x, flat.base_point);
  if (space == Space::Toric && flat.codim > 0) {
    const Vec w = mul(flat.conormals, d);
    IntVec wi(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!is_integer(w[i])) throw std::invalid_argument("to_local: point not on flat");
      wi[i] = w[i].get_num();
    }
    IntVec z(flat.integral_frame.rows());
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = 0; j < wi.size(); ++j) z[i] += flat.integral_frame(i, j) * wi[j];
    }
    d = sub(d, to_rational(z));
  }
  if (flat.dim() == 0) {
    if (!is_zero(d)) throw std::invalid_argument("to_local: point not on flat");
    return Vec{};
  }
  auto t = solve_particular(to_rational(flat.direction), d);
  if (!t || to_rational(flat.direction) * *t != d) {
    throw std::invalid_argument("to_local: point not on flat");
  }
  return *t;
}

Vec to_ambient(const Flat& flat, const Vec& t) {
  return add(flat.base_point, tangent_to_ambient(flat, t));
}

Vec tangent_to_ambient(const Flat& flat, const Vec& s) {
  return mul(flat.direction, s);
}

bool contains_flat(Space space, const Hyperplane& h, const Flat& flat) {
  if (flat.at_infinity) return true;
  if (!is_zero(column_dot(h.normal, flat.direction))) return false;
  const Rational delta = dot(h.normal, flat.base_point) - h.offset;
  return space == Space::Toric ? is_integer(delta) : delta == 0;
}

std::optional<std::size_t> FlatPoset::find(const std::string& id) const {
  auto it = by_id.find(id);
  if (it == by_id.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> FlatPoset::cover_between(std::size_t parent, std::size_t child) const {
  for (auto c : children.at(parent)) {
    if (covers[c].child == child) return c;
  }
  return std::nullopt;
}

std::vector<Flag> FlatPoset::flags(std::size_t k) const {
  std::vector<Flag> out;
  Flag current{0};
  auto rec = [&](auto&& self) -> void {
    if (current.size() == k + 1) {
      out.push_back(current);
      return;
    }
    for (auto c : children[current.back()]) {
      current.push_back(covers[c].child);
      self(self);
      current.pop_back();
    }
  };
  if (!flats.empty()) rec(rec);
  std::sort(out.begin(), out.end());
  return out;
}

FlatPoset build_flat_poset(Space space, std::size_t n, const std::vector<Hyperplane>& hyperplanes,
                           bool with_infinity) {
  if (with_infinity && space != Space::Affine) {
    throw std::invalid_argument("build_flat_poset: the point at infinity needs an affine arrangement");
  }
  for (const auto& h : hyperplanes) {
    if (h.normal.size() != n || is_zero(h.normal)) {
      throw std::invalid_argument("build_flat_poset: bad hyperplane normal");
    }
  }
  struct RawCover {
    std::size_t parent, child;
    IntVec conormal;
    Rational level;
  };
  std::vector<Flat> found;
  std::map<std::string, std::size_t> seen;
  std::vector<RawCover> raw;
  std::set<std::pair<std::size_t, std::size_t>> raw_seen;

  found.push_back(make_flat(space, IntMatrix(0, n), Vec(n)));
  seen.emplace(found[0].id, 0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t li = queue.front();
    queue.pop_front();
    if (found[li].dim() == 0) continue;
    const Flat l = found[li];
    for (const auto& h : hyperplanes) {
      const IntVec c = column_dot(h.normal, l.direction);
      if (is_zero(c)) continue;
      const Integer g = gcd_of(c);
      IntVec cp(c.size());
      for (std::size_t j = 0; j < c.size(); ++j) cp[j] = c[j] / g;
      int s = 1;
      for (const auto& e : cp) {
        if (e != 0) {
          s = sign_of(e);
          break;
        }
      }
      if (s < 0) {
        for (auto& e : cp) e = -e;
      }
      const Rational delta = dot(h.normal, l.base_point) - h.offset;
      std::vector<Rational> levels;
      if (space == Space::Toric) {
        for (Integer j = 0; j < g; ++j) levels.push_back(frac_of(Rational(s) * (Rational(j) - delta) / Rational(g)));
      } else {
        levels.push_back(Rational(-s) * delta / Rational(g));
      }
      std::size_t pivot = 0;
      while (cp[pivot] == 0) ++pivot;
      const IntMatrix rows = stack_rows(l.conormals, h.normal);
      for (const auto& gamma : levels) {
        Vec t0(cp.size());
        t0[pivot] = gamma / Rational(cp[pivot]);
        Flat child = make_flat(space, rows, to_ambient(l, t0));
        auto [it, inserted] = seen.emplace(child.id, found.size());
        if (inserted) {
          found.push_back(std::move(child));
          queue.push_back(it->second);
        }
        if (raw_seen.emplace(li, it->second).second) raw.push_back({li, it->second, cp, gamma});
      }
    }
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (found[a].codim != found[b].codim) return found[a].codim < found[b].codim;
    return found[a].id < found[b].id;
  });
  std::vector<std::size_t> rank_of(found.size());
  FlatPoset poset;
  poset.space = space;
  poset.n = n;
  poset.hyperplanes = hyperplanes;
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank_of[order[i]] = i;
    poset.flats.push_back(std::move(found[order[i]]));
  }
  for (auto& f : poset.flats) {
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) {
      if (contains_flat(space, hyperplanes[h], f)) f.hyperplanes.push_back(h);
    }
  }
  for (auto& rc : raw) {
    Cover c;
    c.parent = rank_of[rc.parent];
    c.child = rank_of[rc.child];
    c.conormal = rc.conormal;
    c.level = rc.level;
    const Flat& l = poset.flats[c.parent];
    c.transversal = tangent_to_ambient(l, to_rational(c.conormal));
    c.sign = frame_sign(poset.flats[c.child].conormals, c.transversal, l.frame);
    poset.covers.push_back(std::move(c));
  }

  if (with_infinity) {
    Flat inf;
    inf.id = "inf";
    inf.codim = n;
    inf.at_infinity = true;
    inf.direction = IntMatrix(n, 0);
    inf.frame = Matrix::identity(n);
    inf.conormals = IntMatrix::identity(n);
    inf.levels = Vec(n);
    for (std::size_t h = 0; h < hyperplanes.size(); ++h) inf.hyperplanes.push_back(h);
    const std::size_t ii = poset.flats.size();
    poset.flats.push_back(std::move(inf));
    poset.infinity = ii;
    for (std::size_t li = 0; li < ii; ++li) {
      const Flat& l = poset.flats[li];
      if (l.dim() != 1) continue;
      Cover c;
      c.parent = li;
      c.child = ii;
      c.conormal = IntVec{1};
      c.level = 0;
      c.transversal = scale(to_rational(IntVec(l.direction.col(0))), -1);
      c.sign = frame_sign(poset.flats[ii].conormals, c.transversal, l.frame);
      poset.covers.push_back(std::move(c));
    }
  }

  std::sort(poset.covers.begin(), poset.covers.end(), [](const Cover& a, const Cover& b) {
    return std::make_pair(a.parent, a.child) < std::make_pair(b.parent, b.child);
  });
  poset.children.assign(poset.flats.size(), {});
  poset.parents.assign(poset.flats.size(), {});
  for (std::size_t c = 0; c < poset.covers.size(); ++c) {
    poset.children[poset.covers[c].parent].push_back(c);
    poset.parents[poset.covers[c].child].push_back(c);
  }
  for (std::size_t i = 0; i < poset.flats.size(); ++i) poset.by_id.emplace(poset.flats[i].id, i);
  return poset;
}

}  // namespace arrangeval
