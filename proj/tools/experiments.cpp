#include <iostream>
#include <string>
#include <vector>

#include "arrangeval/chains.hpp"
#include "arrangeval/complex.hpp"
#include "arrangeval/hadwiger.hpp"
#include "arrangeval/toric.hpp"
#include "io.hpp"

namespace {

using namespace arrangeval;
using io::Json;

Hyperplane hp(IntVec normal, Rational offset) { return Hyperplane{std::move(normal), std::move(offset)}; }

Arrangement one_dim(std::size_t count) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < count; ++i) hs.push_back(hp({1}, ratio(Integer(i), Integer(count))));
  return make_toric(1, hs);
}

// Υ(λP) against Υ(P) for every rank, with the exponent e solving ratio = λᵉ when it is a power.
Json scaling_case(const std::string& name, const Arrangement& a, const std::vector<Vec>& points,
                  const Rational& lambda) {
  const ArrangementComplex c = ArrangementComplex::build(a);
  const Polytope p = Polytope::from_vertices(points);
  const Polytope q = p.scaled(lambda);
  Json ranks = Json::array();
  for (std::size_t k = 0; k <= c.n(); ++k) {
    const Vec u = hadwiger_vector(c, p, k);
    const Vec w = hadwiger_vector(c, q, k);
    std::optional<Rational> r;
    bool consistent = true;
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == 0) {
        consistent = consistent && w[i] == 0;
        continue;
      }
      const Rational ri = w[i] / u[i];
      if (r && *r != ri) consistent = false;
      if (!r) r = ri;
    }
    Json row{{"k", k}, {"consistent", consistent}};
    if (r) {
      row["ratio"] = io::to_json(*r);
      Json exponent = nullptr;
      Rational power = 1;
      for (std::size_t e = 0; e <= c.n(); ++e) {
        if (power == *r) exponent = e;
        power *= lambda;
      }
      row["exponent"] = exponent;
      row["n_minus_k"] = c.n() - k;
    }
    ranks.push_back(row);
  }
  return Json{{"name", name}, {"lambda", io::to_json(lambda)}, {"ranks", ranks}};
}

Json scaling_experiment() {
  Json cases = Json::array();
  const Arrangement tri = make_toric(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, 0)});
  cases.push_back(scaling_case("triangle-2d", tri, {{0, 0}, {1, 0}, {0, 1}}, 2));
  const Arrangement cube = make_toric(3, {hp({1, 0, 0}, 0), hp({0, 1, 0}, 0), hp({0, 0, 1}, 0)});
  cases.push_back(scaling_case("cube-3d", cube,
                               {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
                               2));
  const Arrangement simplex =
      make_toric(3, {hp({1, 0, 0}, 0), hp({0, 1, 0}, 0), hp({0, 0, 1}, 0), hp({1, 1, 1}, 0)});
  cases.push_back(scaling_case("simplex-3d", simplex, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 2));
  cases.push_back(scaling_case("simplex-3d", simplex, {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3));
  return cases;
}

// dim V_k of a product arrangement against the convolution of the factor dimensions.
Json product_experiment(std::size_t a_count, std::size_t b_count) {
  const ArrangementComplex a = ArrangementComplex::build(one_dim(a_count));
  const ArrangementComplex b = ArrangementComplex::build(one_dim(b_count));
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < a_count; ++i) hs.push_back(hp({1, 0}, ratio(Integer(i), Integer(a_count))));
  for (std::size_t i = 0; i < b_count; ++i) hs.push_back(hp({0, 1}, ratio(Integer(i), Integer(b_count))));
  const ArrangementComplex ab = ArrangementComplex::build(make_toric(2, hs));
  const auto da = degree_filtration(a).dims;
  const auto db = degree_filtration(b).dims;
  const auto dab = degree_filtration(ab).dims;
  std::vector<std::size_t> conv(da.size() + db.size() - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) conv[i + j] += da[i] * db[j];
  }
  return Json{{"factors", {a_count, b_count}}, {"left", da}, {"right", db}, {"product", dab},
              {"convolution", conv}, {"equal", conv == dab}};
}

}  // namespace

int main() {
  Json report{{"schema", io::kSchema}, {"command", "experiments"}, {"seed", 0}};
  report["scaling"] = scaling_experiment();
  Json products = Json::array();
  for (std::size_t a = 2; a <= 3; ++a) {
    for (std::size_t b = a; b <= 4; ++b) products.push_back(product_experiment(a, b));
  }
  report["product"] = products;
  std::cout << report.dump(2) << "\n";
  return 0;
}
