#include "arrangeval/hadwiger.hpp"

#include <algorithm>
#include <stdexcept>

#include "arrangeval/affine.hpp"
#include "arrangeval/lattice.hpp"

namespace arrangeval {

std::optional<int> flag_of_polytope(const ArrangementComplex& c, const Polytope& p, const Flag& flag) {
  if (flag.empty()) throw std::invalid_argument("flag_of_polytope: empty flag");
  for (const auto& pf : polytope_flags(p, c.poset(), flag.size() - 1)) {
    if (pf.flag == flag) return pf.sign;
  }
  return std::nullopt;
}

Vec hadwiger_vector(const ArrangementComplex& c, const Polytope& p, std::size_t k) {
  const FlagLayout& layout = c.layout(k);
  Vec out(layout.flags.size());
  for (const auto& pf : polytope_flags(p, c.poset(), k)) {
    const auto fi = layout.find(pf.flag);
    if (!fi) throw std::logic_error("hadwiger_vector: polytope flag missing from Λ_k");
    std::vector<Vec> points;
    for (auto v : p.lattice().faces[pf.faces.back()]) points.push_back(p.vertices()[v]);
    out[*fi] += Rational(pf.sign) * normalized_volume(points, c.flat(pf.flag.back()));
  }
  return out;
}

namespace {

Vec volume_pairing(const ArrangementComplex& c, const ElementaryChain& x) {
  const FlagLayout& layout = c.layout(x.rank);
  Vec out(layout.flags.size());
  for (std::size_t fi = 0; fi < layout.flags.size(); ++fi) {
    const std::size_t l = layout.flags[fi].back();
    const auto& cells = c.cells(l);
    for (std::size_t ci = 0; ci < cells.size(); ++ci) {
      const Rational& v = x.values[layout.offset[fi] + ci];
      if (v == 0) continue;
      if (!cells[ci].bounded || c.flat(l).at_infinity) {
        throw std::logic_error("hadwiger: chain is supported on an unbounded cell");
      }
      out[fi] += v * cells[ci].volume;
    }
  }
  return out;
}

}  // namespace

Vec hadwiger_vector_via_leray(const ArrangementComplex& c, const Polytope& p, std::size_t k) {
  return volume_pairing(c, leray_power(c, indicator_chain(c, p), k));
}

Rational hadwiger_eval(const ArrangementComplex& c, const HadwigerLabel& label, const Polytope& p) {
  const auto fi = c.layout(label.rank()).find(label.flag);
  if (!fi) throw std::invalid_argument("hadwiger_eval: label is not a flag of the arrangement");
  return Rational(label.orientation) * hadwiger_vector(c, p, label.rank())[*fi];
}

FlagFunction one_flag_chain(const ArrangementComplex& c, const HadwigerLabel& label) {
  const FlagLayout& layout = c.layout(label.rank());
  const auto fi = layout.find(label.flag);
  if (!fi) throw std::invalid_argument("one_flag_chain: label is not a flag of the arrangement");
  FlagFunction f{label.rank(), Vec(layout.flags.size())};
  f.values[*fi] = label.orientation;
  return f;
}

Matrix hadwiger_functionals(const ArrangementComplex& c, std::size_t k) {
  const std::size_t cells = c.top_cells();
  Matrix out(c.layout(k).flags.size(), cells);
  for (std::size_t i = 0; i < cells; ++i) {
    Vec e(cells);
    e[i] = 1;
    const Vec col = volume_pairing(c, leray_power(c, e, k));
    for (std::size_t r = 0; r < col.size(); ++r) out(r, i) = col[r];
  }
  return out;
}

DecompositionTable valuation_decompose(const ArrangementComplex& c, const Vec& mu,
                                       const FiltrationReport& filtration) {
  if (c.space() != Space::Toric) throw std::invalid_argument("valuation_decompose: torus arrangements only");
  if (mu.size() != c.top_cells()) throw std::invalid_argument("valuation_decompose: size mismatch");
  DecompositionTable table;
  Vec residual = mu;
  for (std::size_t k = 0; k <= c.n(); ++k) {
    const auto& images = filtration.quotient_images[k];
    const auto& lifts = filtration.quotient_lifts[k];
    const std::size_t cols = c.layout(k).flags.size();
    const std::size_t dim = images.size();
    // ν ∈ V_k with ⟨ν, q_i⟩ = residual(w_i) for the generators q_i = Dᵏw_i.
    Matrix gram(dim, dim);
    Vec rhs(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      rhs[i] = dot(residual, lifts[i]);
      for (std::size_t j = 0; j < dim; ++j) gram(i, j) = dot(images[i], images[j]);
    }
    Vec nu(cols);
    if (dim > 0) {
      const Vec a = inverse(gram) * rhs;
      for (std::size_t j = 0; j < dim; ++j) nu = add(nu, scale(images[j], a[j]));
    }
    const Matrix upsilon = hadwiger_functionals(c, k);
    for (std::size_t r = 0; r < cols; ++r) {
      if (nu[r] == 0) continue;
      for (std::size_t i = 0; i < residual.size(); ++i) residual[i] -= nu[r] * upsilon(r, i);
    }
    table.coefficients.push_back(std::move(nu));
  }
  if (!is_zero(residual)) throw std::logic_error("valuation_decompose: residual after rank n");
  return table;
}

DecompositionTable valuation_decompose(const ArrangementComplex& c, const Vec& mu) {
  return valuation_decompose(c, mu, degree_filtration(c));
}

Vec reconstruct(const ArrangementComplex& c, const DecompositionTable& table) {
  Vec out(c.top_cells());
  for (std::size_t k = 0; k < table.coefficients.size(); ++k) {
    const Matrix upsilon = hadwiger_functionals(c, k);
    for (std::size_t r = 0; r < table.coefficients[k].size(); ++r) {
      const Rational& f = table.coefficients[k][r];
      if (f == 0) continue;
      for (std::size_t i = 0; i < out.size(); ++i) out[i] += f * upsilon(r, i);
    }
  }
  return out;
}

std::size_t induced_flat_map(const ArrangementComplex& source, const ArrangementComplex& target,
                             const std::vector<std::size_t>& j, std::size_t flat) {
  if (source.space() != target.space() || source.n() != target.n()) {
    throw std::invalid_argument("induced map: arrangements differ in type or dimension");
  }
  const auto& hs = source.arrangement().hyperplanes;
  const auto& ht = target.arrangement().hyperplanes;
  if (j.size() != hs.size()) throw std::invalid_argument("induced map: one image per hyperplane");
  const Flat& f = source.flat(flat);
  if (f.at_infinity) {
    if (!target.infinity()) throw std::invalid_argument("induced map: target has no flat at infinity");
    return *target.infinity();
  }
  const std::size_t n = source.n();
  IntMatrix a(0, n);
  Vec b, b2;
  for (auto h : f.hyperplanes) {
    if (j[h] >= ht.size()) throw std::invalid_argument("induced map: hyperplane index out of range");
    const Hyperplane& image = ht[j[h]];
    int s = 0;
    if (image.normal == hs[h].normal) s = 1;
    else {
      IntVec neg = image.normal;
      for (auto& e : neg) e = -e;
      if (neg == hs[h].normal) s = -1;
    }
    if (s == 0) throw std::invalid_argument("induced map: hyperplane " + std::to_string(h) + " is not mapped to a parallel one");
    a.append_row(hs[h].normal);
    b.push_back(hs[h].offset);
    b2.push_back(Rational(s) * image.offset);
  }
  Vec point(n);
  if (a.rows() > 0) {
    if (source.space() == Space::Affine) {
      auto x = solve_particular(to_rational(a), b2);
      if (!x) throw std::invalid_argument("induced map: image hyperplanes of " + f.id + " do not meet");
      point = *x;
    } else {
      // Components of {A x ≡ b} are indexed by (d_i y_i − (U b)_i) mod d_i with y = V⁻¹x.
      const auto snf = smith_normal_form(a);
      const Vec ub = to_rational(snf.U) * b;
      const Vec ub2 = to_rational(snf.U) * b2;
      const Vec y = inverse(to_rational(snf.V)) * f.base_point;
      Vec y2(n);
      for (std::size_t i = 0; i < a.rows(); ++i) {
        const Integer d = i < std::min(a.rows(), n) ? snf.D(i, i) : Integer(0);
        if (d == 0) {
          if (!is_integer(ub2[i])) throw std::invalid_argument("induced map: image hyperplanes of " + f.id + " do not meet");
          continue;
        }
        const Rational index = Rational(d) * y[i] - ub[i];
        if (!is_integer(index)) throw std::logic_error("induced map: flat is not a component");
        y2[i] = (ub2[i] + index) / Rational(d);
      }
      point = to_rational(snf.V) * y2;
    }
  }
  const Flat image = make_flat(source.space(), saturate(a), point);
  const auto idx = target.poset().find(image.id);
  if (!idx) throw std::invalid_argument("induced map: image of " + f.id + " is not a flat of the target");
  return *idx;
}

HadwigerLabel induced_label_map(const ArrangementComplex& source, const ArrangementComplex& target,
                                const std::vector<std::size_t>& j, const HadwigerLabel& label) {
  HadwigerLabel out;
  out.orientation = label.orientation;
  for (auto f : label.flag) out.flag.push_back(induced_flat_map(source, target, j, f));
  if (!target.layout(label.rank()).find(out.flag)) {
    throw std::invalid_argument("induced map: image of " + source.label(label.flag) + " is not a flag");
  }
  return out;
}

}  // namespace arrangeval
