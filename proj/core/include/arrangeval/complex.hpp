#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrangeval/flats.hpp"

namespace arrangeval {

// Offsets of the per-flag blocks of Eᵏ; each block holds one coordinate per cell of the flag's
// base flat.
struct FlagLayout {
  std::vector<Flag> flags;
  std::vector<std::size_t> offset;  // flags.size() + 1 entries
  std::map<Flag, std::size_t> index;

  std::size_t size() const { return offset.back(); }
  std::optional<std::size_t> find(const Flag& f) const;
};

// Plus and minus cells of the parent on the two sides of a cell of the child.
struct Wall {
  std::size_t plus = 0;
  std::size_t minus = 0;
};

// Flats, cells, walls, flags and loops of a toric arrangement, an affine arrangement, or an affine
// arrangement compactified in the sphere by the point ∞.
class ArrangementComplex {
 public:
  static ArrangementComplex build(const Arrangement& a, bool sphere = false);

  Space space() const { return poset_.space; }
  std::size_t n() const { return poset_.n; }
  bool sphere() const { return poset_.infinity.has_value(); }
  const Arrangement& arrangement() const { return arrangement_; }
  const FlatPoset& poset() const { return poset_; }
  const std::vector<Flat>& flats() const { return poset_.flats; }
  const Flat& flat(std::size_t i) const { return poset_.flats.at(i); }
  const std::vector<Cover>& covers() const { return poset_.covers; }
  const Cover& cover(std::size_t i) const { return poset_.covers.at(i); }
  const std::vector<std::size_t>& children(std::size_t flat) const { return poset_.children.at(flat); }
  std::optional<std::size_t> infinity() const { return poset_.infinity; }

  const CellTable& table(std::size_t flat) const { return tables_.at(flat); }
  const std::vector<Cell>& cells(std::size_t flat) const { return tables_.at(flat).cells; }
  const std::vector<Wall>& walls(std::size_t cover) const { return walls_.at(cover); }
  const std::vector<LoopClass>& loops(std::size_t flat) const { return loops_.at(flat); }
  const FlagLayout& layout(std::size_t k) const { return layouts_.at(k); }
  std::size_t top_cells() const { return cells(0).size(); }

  // Cell of the flat containing x + ε·dir (dir tangent to the flat, or empty/zero for a generic x).
  std::size_t locate(std::size_t flat, const Vec& x, const Vec& dir) const;
  bool finite(const Flag& f) const;
  // Flat ids joined by " > ".
  std::string label(const Flag& f) const;

 private:
  Arrangement arrangement_;
  FlatPoset poset_;
  std::vector<CellTable> tables_;
  std::vector<std::vector<Wall>> walls_;
  std::vector<std::vector<LoopClass>> loops_;
  std::vector<FlagLayout> layouts_;
};

}  // namespace arrangeval
