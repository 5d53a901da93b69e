#include "arrangeval/complex.hpp"

#include <algorithm>
#include <stdexcept>

#include "arrangeval/affine.hpp"
#include "arrangeval/toric.hpp"

namespace arrangeval {

std::optional<std::size_t> FlagLayout::find(const Flag& f) const {
  auto it = index.find(f);
  if (it == index.end()) return std::nullopt;
  return it->second;
}

namespace {

std::vector<LoopClass> toric_loops(const ArrangementComplex& c, std::size_t flat) {
  const Flat& l = c.flat(flat);
  const std::size_t m = l.dim();
  std::vector<LoopClass> loops;
  if (m == 0) return loops;
  const Vec base = loop_base_point(c.poset(), flat);
  for (std::size_t j = 0; j < m; ++j) {
    LoopClass loop;
    loop.flat = flat;
    loop.direction = IntVec(m);
    loop.direction[j] = 1;
    loop.base_point = base;
    for (auto ci : c.children(flat)) {
      const Cover& cv = c.cover(ci);
      const Integer cj = cv.conormal[j];
      if (cj == 0) continue;
      const Rational step = Rational(1) / Rational(abs(cj));
      const Rational start = (cv.level - dot(cv.conormal, base)) / Rational(cj);
      for (Rational s = frac_of(start / step) * step; s < 1; s += step) {
        Vec t = base;
        t[j] += s;
        Crossing x;
        x.cover = ci;
        x.cell = c.locate(cv.child, to_ambient(l, t), {});
        x.sign = sign_of(cj);
        x.parameter = s;
        loop.crossings.push_back(x);
      }
    }
    std::sort(loop.crossings.begin(), loop.crossings.end(),
              [](const Crossing& a, const Crossing& b) { return a.parameter < b.parameter; });
    loops.push_back(std::move(loop));
  }
  return loops;
}

// Lines of the sphere compactification are circles through ∞.
std::vector<LoopClass> circle_loops(const ArrangementComplex& c, std::size_t flat) {
  const Flat& l = c.flat(flat);
  if (l.at_infinity || l.dim() != 1) return {};
  LoopClass loop;
  loop.flat = flat;
  loop.direction = IntVec{1};
  const auto& cells = c.cells(flat);
  loop.base_point = cells.front().local_point;
  for (const auto& cell : cells) {
    if (cell.local_point < loop.base_point) loop.base_point = cell.local_point;
  }
  Rational last = 0;
  std::size_t inf_cover = 0;
  for (auto ci : c.children(flat)) {
    const Cover& cv = c.cover(ci);
    if (c.flat(cv.child).at_infinity) {
      inf_cover = ci;
      continue;
    }
    Crossing x;
    x.cover = ci;
    x.cell = 0;
    x.sign = 1;
    x.parameter = cv.level - loop.base_point[0];
    last = std::max(last, x.parameter);
    loop.crossings.push_back(x);
  }
  std::sort(loop.crossings.begin(), loop.crossings.end(),
            [](const Crossing& a, const Crossing& b) { return a.parameter < b.parameter; });
  loop.crossings.push_back(Crossing{inf_cover, 0, 1, last + 1});
  return {loop};
}

}  // namespace

ArrangementComplex ArrangementComplex::build(const Arrangement& a, bool sphere) {
  if (sphere && a.space != Space::Affine) {
    throw std::invalid_argument("sphere compactification needs an affine arrangement");
  }
  ArrangementComplex c;
  c.arrangement_ = a;
  for (auto& h : c.arrangement_.hyperplanes) h.offset.canonicalize();
  c.poset_ = build_flat_poset(a.space, a.n, c.arrangement_.hyperplanes, sphere);
  for (std::size_t f = 0; f < c.poset_.flats.size(); ++f) {
    c.tables_.push_back(a.space == Space::Toric ? toric_cell_table(c.poset_, f)
                                                : affine_cell_table(c.poset_, f));
  }
  for (const auto& cv : c.poset_.covers) {
    std::vector<Wall> walls;
    if (c.poset_.flats[cv.child].at_infinity) {
      const auto& cells = c.cells(cv.parent);
      std::size_t lo = 0, hi = 0;
      for (std::size_t i = 1; i < cells.size(); ++i) {
        if (cells[i].local_point < cells[lo].local_point) lo = i;
        if (cells[hi].local_point < cells[i].local_point) hi = i;
      }
      walls.push_back({lo, hi});
    } else {
      for (const auto& cell : c.cells(cv.child)) {
        walls.push_back({c.locate(cv.parent, cell.point, cv.transversal),
                         c.locate(cv.parent, cell.point, scale(cv.transversal, -1))});
      }
    }
    c.walls_.push_back(std::move(walls));
  }
  for (std::size_t f = 0; f < c.poset_.flats.size(); ++f) {
    if (a.space == Space::Toric) c.loops_.push_back(toric_loops(c, f));
    else if (sphere) c.loops_.push_back(circle_loops(c, f));
    else c.loops_.emplace_back();
  }
  for (std::size_t k = 0; k <= a.n; ++k) {
    FlagLayout layout;
    layout.flags = c.poset_.flags(k);
    layout.offset.push_back(0);
    for (std::size_t i = 0; i < layout.flags.size(); ++i) {
      layout.index.emplace(layout.flags[i], i);
      layout.offset.push_back(layout.offset.back() + c.cells(layout.flags[i].back()).size());
    }
    c.layouts_.push_back(std::move(layout));
  }
  return c;
}

std::size_t ArrangementComplex::locate(std::size_t flat, const Vec& x, const Vec& dir) const {
  const Flat& l = poset_.flats.at(flat);
  if (l.at_infinity) return 0;
  const IntVec code = space() == Space::Toric ? toric_cell_code(poset_, tables_[flat], flat, x, dir)
                                              : affine_cell_code(poset_, x, dir);
  auto it = tables_[flat].index.find(code);
  if (it == tables_[flat].index.end()) {
    throw std::logic_error("locate: no cell of flat " + l.id + " with code " + to_string(code));
  }
  return it->second;
}

std::string ArrangementComplex::label(const Flag& f) const {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) out += " > ";
    out += flat(f[i]).id;
  }
  return out;
}

bool ArrangementComplex::finite(const Flag& f) const {
  return !poset_.infinity || f.empty() || f.back() != *poset_.infinity;
}

}  // namespace arrangeval
