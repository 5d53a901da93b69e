#include "arrangeval/toric.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arrangeval/complex.hpp"
#include "arrangeval/polytope.hpp"

namespace arrangeval {

namespace {

IntVec restricted_normal(const Hyperplane& h, const Flat& l) {
  IntVec c(l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t i = 0; i < h.normal.size(); ++i) c[j] += h.normal[i] * l.direction(i, j);
  }
  return c;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

std::pair<IntVec, Rational> normalized(const Hyperplane& h) {
  IntVec a = h.normal;
  Rational b = h.offset;
  for (const auto& e : a) {
    if (e == 0) continue;
    if (e < 0) {
      for (auto& x : a) x = -x;
      b = -b;
    }
    break;
  }
  return {a, frac_of(b)};
}

}  // namespace

Arrangement make_toric(std::size_t n, std::vector<Hyperplane> hyperplanes) {
  for (auto& h : hyperplanes) {
    h.offset.canonicalize();
    h.offset = frac_of(h.offset);
  }
  return Arrangement{Space::Toric, n, std::move(hyperplanes)};
}

ValidationReport validate_toric(const Arrangement& a) {
  ValidationReport r;
  if (a.space != Space::Toric) r.fail("arrangement is not toric");
  if (a.n == 0) r.fail("dimension must be positive");
  if (a.hyperplanes.empty()) r.fail("no hyperplanes");
  std::set<std::pair<IntVec, Rational>> seen;
  bool shapes_ok = true;
  for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
    const auto& h = a.hyperplanes[i];
    const std::string tag = "hyperplane " + std::to_string(i) + ": ";
    if (h.normal.size() != a.n) {
      r.fail(tag + "normal has wrong length");
      shapes_ok = false;
      continue;
    }
    if (is_zero(h.normal)) {
      r.fail(tag + "zero normal");
      shapes_ok = false;
      continue;
    }
    if (gcd_of(h.normal) != 1) r.fail(tag + "normal is not primitive");
    if (h.offset < 0 || h.offset >= 1) r.fail(tag + "offset not reduced into [0,1)");
    if (!seen.insert(normalized(h)).second) r.fail(tag + "repeats an earlier subtorus");
  }
  if (shapes_ok && !a.hyperplanes.empty() && a.n > 0) {
    Matrix m(a.hyperplanes.size(), a.n);
    for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
      for (std::size_t j = 0; j < a.n; ++j) m(i, j) = a.hyperplanes[i].normal[j];
    }
    if (rank(m) < a.n) r.fail("no 0-dimensional flat: lifted top cells are unbounded");
  }
  return r;
}

FlatPoset toric_flats(const Arrangement& a) {
  return build_flat_poset(Space::Toric, a.n, a.hyperplanes);
}

Arrangement restrict_to_flat(const FlatPoset& poset, std::size_t flat) {
  const Flat& l = poset.flats.at(flat);
  if (l.dim() == 0) throw std::invalid_argument("restrict_to_flat: flat has dimension 0");
  Arrangement out{poset.space, l.dim(), {}};
  for (auto c : poset.children[flat]) {
    const Cover& cv = poset.covers[c];
    if (poset.flats[cv.child].at_infinity) continue;
    out.hyperplanes.push_back({cv.conormal, cv.level});
  }
  return out;
}

IntVec reduce_code(const CellTable& table, IntVec code) {
  for (std::size_t i = 0; i < table.pivots.size(); ++i) {
    const std::size_t p = table.pivots[i];
    const Integer pivot = table.lattice(i, p);
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), code[p].get_mpz_t(), pivot.get_mpz_t());
    if (q == 0) continue;
    for (std::size_t j = 0; j < code.size(); ++j) code[j] -= q * table.lattice(i, j);
  }
  return code;
}

IntVec toric_cell_code(const FlatPoset& poset, const CellTable& table, std::size_t flat,
                       const Vec& x, const Vec& dir) {
  const Flat& l = poset.flats[flat];
  const Vec lifted = to_ambient(l, to_local(Space::Toric, l, x));
  IntVec code(poset.hyperplanes.size());
  for (std::size_t h = 0; h < poset.hyperplanes.size(); ++h) {
    const auto& hp = poset.hyperplanes[h];
    const Rational v = dot(hp.normal, lifted) - hp.offset;
    code[h] = floor_of(v);
    if (is_integer(v) && !dir.empty() && sign_of(dot(hp.normal, dir)) < 0) code[h] -= 1;
  }
  return reduce_code(table, std::move(code));
}

CellTable toric_cell_table(const FlatPoset& poset, std::size_t flat) {
  const Flat& l = poset.flats.at(flat);
  const std::size_t m = l.dim();
  const std::size_t count = poset.hyperplanes.size();
  std::vector<IntVec> c(count);
  Vec delta(count);
  for (std::size_t h = 0; h < count; ++h) {
    c[h] = restricted_normal(poset.hyperplanes[h], l);
    delta[h] = dot(poset.hyperplanes[h].normal, l.base_point) - poset.hyperplanes[h].offset;
  }
  CellTable table;
  if (m == 0) {
    Cell cell;
    cell.code.resize(count);
    for (std::size_t h = 0; h < count; ++h) cell.code[h] = floor_of(delta[h]);
    cell.point = l.base_point;
    cell.vertices = {l.base_point};
    cell.volume = 1;
    table.lattice = IntMatrix(0, count);
    table.index.emplace(cell.code, 0);
    table.cells.push_back(std::move(cell));
    return table;
  }

  IntMatrix ct(m, count);
  for (std::size_t h = 0; h < count; ++h) {
    for (std::size_t j = 0; j < m; ++j) ct(j, h) = c[h][j];
  }
  table.lattice = hermite_normal_form(ct);
  if (table.lattice.rows() != m) throw std::domain_error("toric cells: unbounded lifted cells");
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t p = 0;
    while (table.lattice(i, p) == 0) ++p;
    table.pivots.push_back(p);
  }

  std::vector<ConvexPiece> pieces{ConvexPiece::box(Vec(m, Rational(0)), Vec(m, Rational(1)))};
  for (std::size_t h = 0; h < count; ++h) {
    if (is_zero(c[h])) continue;
    Rational lo = delta[h], hi = delta[h];
    for (const auto& e : c[h]) {
      if (e < 0) lo += Rational(e);
      else hi += Rational(e);
    }
    const Vec normal = to_rational(c[h]);
    for (Integer z = floor_of(lo); z <= ceil_of(hi); ++z) {
      std::vector<ConvexPiece> next;
      for (const auto& piece : pieces) {
        auto [below, above] = piece.split(normal, Rational(z) - delta[h]);
        if (below) next.push_back(std::move(*below));
        if (above) next.push_back(std::move(*above));
      }
      pieces = std::move(next);
    }
  }

  std::set<IntVec> codes;
  for (const auto& piece : pieces) {
    const Vec t = piece.vertex_average();
    IntVec code(count);
    for (std::size_t h = 0; h < count; ++h) code[h] = floor_of(dot(c[h], t) + delta[h]);
    codes.insert(reduce_code(table, std::move(code)));
  }

  for (const auto& code : codes) {
    std::vector<Halfspace> cons;
    for (std::size_t h = 0; h < count; ++h) {
      if (is_zero(c[h])) continue;
      const Vec normal = to_rational(c[h]);
      cons.push_back({scale(normal, -1), delta[h] - Rational(code[h])});
      cons.push_back({normal, Rational(code[h]) + 1 - delta[h]});
    }
    const std::vector<Vec> local = hpoly_vertices(cons, m);
    Cell cell;
    cell.code = code;
    cell.local_point = vertex_average(local);
    cell.point = to_ambient(l, cell.local_point);
    for (const auto& v : local) cell.vertices.push_back(to_ambient(l, v));
    cell.volume = hull_volume(local);
    table.index.emplace(code, table.cells.size());
    table.cells.push_back(std::move(cell));
  }
  return table;
}

const std::vector<Cell>& toric_cells(const ArrangementComplex& c, std::size_t flat) {
  return c.cells(flat);
}

Vec loop_base_point(const FlatPoset& poset, std::size_t flat) {
  const Flat& l = poset.flats.at(flat);
  const std::size_t m = l.dim();
  if (m == 0) throw std::invalid_argument("loop_base_point: flat has dimension 0");
  std::vector<const Cover*> kids;
  for (auto c : poset.children[flat]) kids.push_back(&poset.covers[c]);
  auto generic = [&](const Vec& t) {
    for (const auto* k : kids) {
      if (is_integer(dot(k->conormal, t) - k->level)) return false;
    }
    for (std::size_t j = 0; j < m; ++j) {
      std::set<Rational> params;
      std::size_t total = 0;
      for (const auto* k : kids) {
        const Integer cj = k->conormal[j];
        if (cj == 0) continue;
        const Rational base = (k->level - dot(k->conormal, t)) / Rational(cj);
        const Rational step = Rational(1) / Rational(abs(cj));
        const Rational first = frac_of(base / step) * step;
        for (Rational s = first; s < 1; s += step) {
          params.insert(s);
          ++total;
        }
      }
      if (params.size() != total) return false;
    }
    return true;
  };
  for (unsigned long q = 2;; ++q) {
    std::vector<unsigned long> idx(m, 0);
    while (true) {
      Vec t(m);
      for (std::size_t j = 0; j < m; ++j) t[j] = ratio(Integer(idx[j]), Integer(q));
      if (generic(t)) return t;
      std::size_t j = m;
      while (j > 0 && idx[j - 1] == q - 1) idx[--j] = 0;
      if (j == 0) break;
      ++idx[j - 1];
    }
    if (q > 4096) throw std::logic_error("loop_base_point: no generic point found");
  }
}

const std::vector<LoopClass>& h1_basis(const ArrangementComplex& c, std::size_t flat) {
  if (c.flat(flat).dim() == 0) throw std::invalid_argument("h1_basis: flat has dimension 0");
  return c.loops(flat);
}

int intersection_index(const LoopClass& loop, std::size_t cover) {
  int total = 0;
  for (const auto& x : loop.crossings) {
    if (x.cover == cover) total += x.sign;
  }
  return total;
}

std::vector<Flag> flag_enumerate(const ArrangementComplex& c, std::size_t k) {
  return c.poset().flags(k);
}

int relative_sign(const Flat& inner, const Matrix& frame) {
  if (frame.cols() != inner.codim) throw std::invalid_argument("relative_sign: frame size");
  const int s = sign_of(determinant(to_rational(inner.conormals) * frame));
  if (s == 0) throw std::domain_error("relative_sign: frame not transversal");
  return s;
}

}  // namespace arrangeval
