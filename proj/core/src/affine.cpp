#include "arrangeval/affine.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "arrangeval/complex.hpp"

namespace arrangeval {

namespace {

IntVec restricted_normal(const Hyperplane& h, const Flat& l) {
  IntVec c(l.dim());
  for (std::size_t j = 0; j < l.dim(); ++j) {
    for (std::size_t i = 0; i < h.normal.size(); ++i) c[j] += h.normal[i] * l.direction(i, j);
  }
  return c;
}

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
  return {a, b};
}

Vec local_difference(const Flat& flat, const Vec& d) {
  if (flat.dim() == 0) return Vec{};
  const Matrix b = to_rational(flat.direction);
  auto t = solve_particular(b, d);
  if (!t || b * *t != d) throw std::invalid_argument("point set does not lie on a translate of the flat");
  return *t;
}

}  // namespace

ValidationReport validate_affine(const Arrangement& a, bool sphere) {
  ValidationReport r;
  if (a.space != Space::Affine) r.fail("arrangement is not affine");
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
    if (!seen.insert(normalized(h)).second) r.fail(tag + "repeats an earlier hyperplane");
  }
  if (shapes_ok && !a.hyperplanes.empty()) {
    Matrix m(0, a.n);
    for (const auto& h : a.hyperplanes) m.append_row(to_rational(h.normal));
    if (rank(m) < a.n) r.fail("no 0-dimensional flat: normals do not span");
  }
  if (sphere && shapes_ok && r.valid) {
    const FlatPoset poset = aff_flats(a, false);
    for (const auto& l : poset.flats) {
      if (l.dim() < 2) continue;
      for (std::size_t i = 0; i < a.hyperplanes.size(); ++i) {
        if (is_zero(restricted_normal(a.hyperplanes[i], l)) &&
            !contains_flat(Space::Affine, a.hyperplanes[i], l)) {
          r.fail("hyperplane " + std::to_string(i) + " is parallel to and disjoint from flat " + l.id);
        }
      }
    }
  }
  return r;
}

FlatPoset aff_flats(const Arrangement& a, bool with_infinity) {
  return build_flat_poset(Space::Affine, a.n, a.hyperplanes, with_infinity);
}

IntVec affine_cell_code(const FlatPoset& poset, const Vec& x, const Vec& dir) {
  IntVec code(poset.hyperplanes.size());
  for (std::size_t h = 0; h < poset.hyperplanes.size(); ++h) {
    const auto& hp = poset.hyperplanes[h];
    int s = sign_of(dot(hp.normal, x) - hp.offset);
    if (s == 0 && !dir.empty()) s = sign_of(dot(hp.normal, dir));
    code[h] = s;
  }
  return code;
}

CellTable affine_cell_table(const FlatPoset& poset, std::size_t flat) {
  const Flat& l = poset.flats.at(flat);
  CellTable table;
  if (l.at_infinity) {
    Cell cell;
    cell.volume = 1;
    table.index.emplace(cell.code, 0);
    table.cells.push_back(std::move(cell));
    return table;
  }
  const std::size_t m = l.dim();
  const std::size_t count = poset.hyperplanes.size();
  if (m == 0) {
    Cell cell;
    cell.code = affine_cell_code(poset, l.base_point, {});
    cell.point = l.base_point;
    cell.vertices = {l.base_point};
    cell.volume = 1;
    table.index.emplace(cell.code, 0);
    table.cells.push_back(std::move(cell));
    return table;
  }

  Rational reach = 0;
  for (const auto& k : poset.flats) {
    if (k.at_infinity) continue;
    if (!std::includes(k.hyperplanes.begin(), k.hyperplanes.end(), l.hyperplanes.begin(),
                       l.hyperplanes.end())) {
      continue;
    }
    for (const auto& t : local_difference(l, sub(k.base_point, l.base_point))) {
      reach = std::max(reach, Rational(abs(t)));
    }
  }
  const Rational w = Rational(floor_of(reach) + 2);
  std::vector<ConvexPiece> pieces{ConvexPiece::box(Vec(m, -w), Vec(m, w))};
  for (std::size_t h = 0; h < count; ++h) {
    const IntVec c = restricted_normal(poset.hyperplanes[h], l);
    if (is_zero(c)) continue;
    const Rational delta = dot(poset.hyperplanes[h].normal, l.base_point) - poset.hyperplanes[h].offset;
    std::vector<ConvexPiece> next;
    for (const auto& piece : pieces) {
      auto [below, above] = piece.split(to_rational(c), -delta);
      if (below) next.push_back(std::move(*below));
      if (above) next.push_back(std::move(*above));
    }
    pieces = std::move(next);
  }

  std::vector<Cell> cells;
  for (const auto& piece : pieces) {
    Cell cell;
    cell.local_point = piece.vertex_average();
    cell.point = to_ambient(l, cell.local_point);
    cell.code = affine_cell_code(poset, cell.point, {});
    cell.bounded = true;
    for (std::size_t b = 0; b < 2 * m; ++b) {
      if (piece.touches(b)) cell.bounded = false;
    }
    for (const auto& v : piece.vertices()) cell.vertices.push_back(to_ambient(l, v));
    std::sort(cell.vertices.begin(), cell.vertices.end(), lex_less);
    if (cell.bounded) cell.volume = hull_volume(piece.vertices());
    cells.push_back(std::move(cell));
  }
  std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) { return a.code < b.code; });
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!table.index.emplace(cells[i].code, i).second) {
      throw std::logic_error("affine cells: two pieces share a sign vector");
    }
  }
  table.cells = std::move(cells);
  return table;
}

const std::vector<Cell>& aff_cells(const ArrangementComplex& c, std::size_t flat) {
  return c.cells(flat);
}

Rational normalized_volume(const std::vector<Vec>& points, const Flat& flat) {
  if (points.empty()) throw std::invalid_argument("normalized_volume: no points");
  if (flat.dim() == 0) return 1;
  std::vector<Vec> local;
  for (const auto& p : points) local.push_back(local_difference(flat, sub(p, points[0])));
  if (affine_rank(local) != flat.dim()) throw std::invalid_argument("normalized_volume: dimension mismatch");
  return hull_volume(local);
}

Rational normalized_volume(const Polytope& p, const Flat& flat) {
  return normalized_volume(p.vertices(), flat);
}

std::vector<std::size_t> face_flats(const Polytope& p, const FlatPoset& poset) {
  const FaceLattice& fl = p.lattice();
  std::vector<std::size_t> out(fl.faces.size());
  for (std::size_t f = 0; f < fl.faces.size(); ++f) {
    const auto& verts = fl.faces[f];
    IntMatrix rows(0, poset.n);
    for (std::size_t i = 0; i < fl.facets.size(); ++i) {
      const auto& fv = fl.faces[fl.facet_face[i]];
      if (!std::includes(fv.begin(), fv.end(), verts.begin(), verts.end())) continue;
      rows.append_row(primitive_integer(fl.facets[i].normal));
    }
    const Flat probe = make_flat(poset.space, rows, fl.vertices[verts[0]]);
    auto idx = poset.find(probe.id);
    if (!idx) {
      throw std::invalid_argument("polytope face spans " + probe.id + ", which is not a flat of the arrangement");
    }
    out[f] = *idx;
  }
  return out;
}

std::vector<PolytopeFlag> polytope_flags(const Polytope& p, const FlatPoset& poset, std::size_t k) {
  if (p.empty()) return {};
  if (p.ambient_dim() != poset.n) throw std::invalid_argument("polytope_flags: dimension mismatch");
  const FaceLattice& fl = p.lattice();
  const std::vector<std::size_t> spans = face_flats(p, poset);
  std::vector<PolytopeFlag> out;
  std::vector<std::size_t> chain{0};
  auto rec = [&](auto&& self) -> void {
    if (chain.size() == k + 1) {
      PolytopeFlag pf;
      pf.faces = chain;
      for (auto f : chain) pf.flag.push_back(spans[f]);
      const Vec last = p.barycenter_of_face(chain.back());
      Matrix frame(poset.n, k);
      for (std::size_t i = 0; i < k; ++i) {
        const Vec v = sub(p.barycenter_of_face(chain[k - 1 - i]), last);
        pf.frame.push_back(v);
        for (std::size_t r = 0; r < poset.n; ++r) frame(r, i) = v[r];
      }
      pf.sign = k == 0 ? 1 : sign_of(determinant(to_rational(poset.flats[pf.flag.back()].conormals) * frame));
      if (pf.sign == 0) throw std::logic_error("polytope_flags: degenerate barycenter frame");
      out.push_back(std::move(pf));
      return;
    }
    const std::size_t cur = chain.back();
    const auto& cv = fl.faces[cur];
    for (std::size_t g = 0; g < fl.faces.size(); ++g) {
      if (fl.face_dim[g] + 1 != fl.face_dim[cur]) continue;
      const auto& gv = fl.faces[g];
      if (!std::includes(cv.begin(), cv.end(), gv.begin(), gv.end())) continue;
      chain.push_back(g);
      self(self);
      chain.pop_back();
    }
  };
  rec(rec);
  return out;
}

}  // namespace arrangeval
