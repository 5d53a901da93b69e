#include "arrangeval/integration.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include "arrangeval/constraints.hpp"
#include "arrangeval/toric.hpp"

namespace arrangeval {

IntegrationError::IntegrationError(std::string flag_, std::size_t cover_, std::size_t wall_,
                                   Rational expected_, Rational found_)
    : std::runtime_error("not integrable at flag " + flag_ + ", cover " + std::to_string(cover_) +
                         ", wall cell " + std::to_string(wall_) + ": jump " +
                         to_string(expected_) + " but path gives " + to_string(found_)),
      flag(std::move(flag_)),
      cover(cover_),
      wall(wall_),
      expected(std::move(expected_)),
      found(std::move(found_)) {}

std::size_t anchor_cell(const ArrangementComplex& c, std::size_t flat, AnchorStrategy strategy) {
  const auto& cells = c.cells(flat);
  std::optional<std::size_t> best;
  auto consider = [&](bool unbounded_only) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (unbounded_only && cells[i].bounded) continue;
      if (!best || cells[i].local_point < cells[*best].local_point) best = i;
    }
  };
  if (strategy == AnchorStrategy::Unbounded && c.space() == Space::Affine) consider(true);
  if (!best) consider(false);
  return *best;
}

namespace {

struct Edge {
  std::size_t from;  // minus side
  std::size_t to;    // plus side
  Rational jump;
  std::size_t cover;
  std::size_t wall;
};

}  // namespace

ElementaryChain integrate_step(const ArrangementComplex& c, const ElementaryChain& x,
                               const IntegrationOptions& options) {
  if (x.rank == 0) throw std::invalid_argument("integrate_step: rank must be positive");
  const std::size_t k = x.rank;
  const FlagLayout& upper = c.layout(k);
  const FlagLayout& lower = c.layout(k - 1);
  ElementaryChain out = zero_chain(c, k - 1);
  std::mt19937_64 rng(options.shuffle_seed.value_or(0));
  for (std::size_t fi = 0; fi < lower.flags.size(); ++fi) {
    const Flag& flag = lower.flags[fi];
    const std::size_t l = flag.back();
    const std::size_t cells = c.cells(l).size();
    std::vector<Edge> edges;
    for (auto ci : c.children(l)) {
      const Cover& cv = c.cover(ci);
      Flag up = flag;
      up.push_back(cv.child);
      const std::size_t ui = *upper.find(up);
      const auto& walls = c.walls(ci);
      for (std::size_t w = 0; w < walls.size(); ++w) {
        edges.push_back({walls[w].minus, walls[w].plus,
                         Rational(cv.sign) * x.values[upper.offset[ui] + w], ci, w});
      }
    }
    std::vector<std::vector<std::size_t>> adjacent(cells);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      adjacent[edges[e].from].push_back(e);
      adjacent[edges[e].to].push_back(e);
    }
    if (options.shuffle_seed) {
      for (auto& a : adjacent) std::shuffle(a.begin(), a.end(), rng);
    }
    std::vector<std::optional<Rational>> eta(cells);
    const std::size_t start = anchor_cell(c, l, options.anchor);
    eta[start] = Rational(0);
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t a = queue.front();
      queue.pop_front();
      for (auto e : adjacent[a]) {
        const Edge& ed = edges[e];
        const std::size_t b = ed.from == a ? ed.to : ed.from;
        if (eta[b]) continue;
        eta[b] = ed.from == a ? Rational(*eta[a] + ed.jump) : Rational(*eta[a] - ed.jump);
        queue.push_back(b);
      }
    }
    for (std::size_t i = 0; i < cells; ++i) {
      if (!eta[i]) throw std::logic_error("integrate_step: wall graph is disconnected");
      out.values[lower.offset[fi] + i] = *eta[i];
    }
    for (const auto& ed : edges) {
      const Rational found = *eta[ed.to] - *eta[ed.from];
      if (found != ed.jump) {
        throw IntegrationError(c.label(flag), ed.cover, ed.wall, ed.jump, found);
      }
    }
  }
  return out;
}

Vec chain_periods(const ArrangementComplex& c, const ElementaryChain& x, std::size_t anchor) {
  const FlagLayout& lower = c.layout(x.rank - 1);
  const FlagLayout& layout = c.layout(x.rank);
  const Flag& flag = lower.flags.at(anchor);
  const auto& loops = c.loops(flag.back());
  Vec out(loops.size());
  for (std::size_t li = 0; li < loops.size(); ++li) {
    for (const auto& cr : loops[li].crossings) {
      const Cover& cv = c.cover(cr.cover);
      Flag f = flag;
      f.push_back(cv.child);
      const std::size_t fi = *layout.find(f);
      out[li] += Rational(cr.sign * cv.sign) * x.values[layout.offset[fi] + cr.cell];
    }
  }
  return out;
}

Vec lift_to_chain(const ArrangementComplex& c, const FlagFunction& f,
                  const IntegrationOptions& options) {
  if (c.space() != Space::Toric) throw std::invalid_argument("lift_to_chain: torus arrangements only");
  ElementaryChain eta = flag_embed(c, f);
  for (std::size_t p = f.rank; p-- > 0;) {
    try {
      eta = integrate_step(c, eta, options);
    } catch (const IntegrationError& e) {
      throw InfeasibleLift(std::string("lift_to_chain: ") + e.what());
    }
    if (p == 0) break;
    const FlagLayout& lower = c.layout(p - 1);
    const FlagLayout& layout = c.layout(p);
    std::vector<Matrix> blocks;
    std::vector<Vec> targets;
    std::vector<std::size_t> coordinate;  // concatenated block coordinate → index in Λ_p
    std::vector<std::size_t> position(layout.flags.size());
    for (std::size_t a = 0; a < lower.flags.size(); ++a) {
      const Flag& anchor = lower.flags[a];
      const std::size_t base = anchor.back();
      const auto& kids = c.children(base);
      const auto& loops = c.loops(base);
      Matrix block(loops.size(), kids.size());
      for (std::size_t j = 0; j < kids.size(); ++j) {
        Flag g = anchor;
        g.push_back(c.cover(kids[j]).child);
        const std::size_t gi = *layout.find(g);
        position[gi] = coordinate.size();
        coordinate.push_back(gi);
        for (std::size_t li = 0; li < loops.size(); ++li) {
          block(li, j) = Rational(intersection_index(loops[li], kids[j]) * c.cover(kids[j]).sign);
        }
      }
      blocks.push_back(std::move(block));
      targets.push_back(chain_periods(c, eta, a));
    }
    const auto rows = reciprocity_system(c, p);
    Matrix relations(rows.size(), coordinate.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (const auto& [j, v] : rows[r].coefficients) relations(r, position[j]) += v;
    }
    const auto lift = lambda_diagonal_lift_coordinates(blocks, targets, relations);
    FlagFunction g{p, Vec(layout.flags.size())};
    std::size_t pos = 0;
    for (const auto& u : lift) {
      for (const auto& value : u) g.values[coordinate[pos++]] = value;
    }
    const ElementaryChain correction = flag_embed(c, g);
    eta.values = sub(eta.values, correction.values);
  }
  return eta.values;
}

Vec lift_direct(const ArrangementComplex& c, const FlagFunction& f) {
  const ElementaryChain target = flag_embed(c, f);
  const std::size_t cells = c.top_cells();
  std::vector<SparseVec> columns;
  for (std::size_t i = 0; i < cells; ++i) {
    Vec e(cells);
    e[i] = 1;
    columns.push_back(to_sparse(leray_power(c, e, f.rank).values));
  }
  std::vector<SparseVec> rows(target.values.size());
  for (std::size_t i = 0; i < cells; ++i) {
    for (const auto& [r, v] : columns[i]) rows[r].emplace_back(i, v);
  }
  auto sol = sparse_solve(rows, target.values, cells);
  if (!sol) throw InfeasibleLift("lift_direct: flag function is not in the image");
  return *sol;
}

}  // namespace arrangeval
