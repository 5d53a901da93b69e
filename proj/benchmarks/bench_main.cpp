#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "arrangeval/chains.hpp"
#include "arrangeval/complex.hpp"
#include "arrangeval/constraints.hpp"
#include "arrangeval/hadwiger.hpp"
#include "arrangeval/lattice.hpp"
#include "arrangeval/linalg.hpp"
#include "arrangeval/toric.hpp"

namespace {

using namespace arrangeval;

Arrangement grid(std::size_t per_axis) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < per_axis; ++i) {
    const Rational offset = ratio(Integer(i), Integer(per_axis));
    hs.push_back({{1, 0}, offset});
    hs.push_back({{0, 1}, offset});
  }
  hs.push_back({{1, 1}, 0});
  return make_toric(2, hs);
}

Arrangement mixed3() {
  return make_toric(3, {{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{1, 1, 1}, 0}});
}

void BM_BuildComplex(benchmark::State& state) {
  const Arrangement a = grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(ArrangementComplex::build(a));
}
BENCHMARK(BM_BuildComplex)->Arg(1)->Arg(2)->Arg(3);

void BM_DegreeFiltration(benchmark::State& state) {
  const ArrangementComplex c = ArrangementComplex::build(grid(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(degree_filtration(c));
}
BENCHMARK(BM_DegreeFiltration)->Arg(1)->Arg(2)->Arg(3);

void BM_Verify3D(benchmark::State& state) {
  const ArrangementComplex c = ArrangementComplex::build(mixed3());
  for (auto _ : state) benchmark::DoNotOptimize(verify_descriptions(c, VerifyMode::Toric));
}
BENCHMARK(BM_Verify3D)->Unit(benchmark::kMillisecond);

void BM_HadwigerVector(benchmark::State& state) {
  const ArrangementComplex c = ArrangementComplex::build(mixed3());
  const Polytope p = Polytope::from_vertices({{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  for (auto _ : state) {
    for (std::size_t k = 0; k <= 3; ++k) benchmark::DoNotOptimize(hadwiger_vector(c, p, k));
  }
}
BENCHMARK(BM_HadwigerVector);

void BM_Rref(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix m(n, n + 1);
  std::uint64_t x = 12345;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      x = x * 6364136223846793005ULL + 1442695040888963407ULL;
      m(i, j) = Rational(static_cast<long>(x >> 60) - 8);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
}
BENCHMARK(BM_Rref)->Arg(8)->Arg(16)->Arg(32);

void BM_SmithNormalForm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = static_cast<long>((i * 7 + j * 13 + i * j) % 11) - 5;
  }
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
