#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "arrangeval/affine.hpp"
#include "arrangeval/complex.hpp"
#include "arrangeval/toric.hpp"

namespace arrangeval::testing {

inline Hyperplane hp(IntVec normal, Rational offset) { return Hyperplane{std::move(normal), std::move(offset)}; }

// N equally spaced points on T¹.
inline Arrangement one_dim(std::size_t count) {
  std::vector<Hyperplane> hs;
  for (std::size_t i = 0; i < count; ++i) hs.push_back(hp({1}, ratio(Integer(i), Integer(count))));
  return make_toric(1, hs);
}

inline Arrangement grid() {
  return make_toric(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 0}, ratio(1, 2)), hp({0, 1}, ratio(1, 2))});
}

inline Arrangement tri() { return make_toric(2, {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, -1}, 0)}); }

inline Arrangement mixed3() {
  return make_toric(3, {hp({1, 2, 0}, 0), hp({0, 1, 1}, ratio(1, 3)), hp({1, 0, -1}, 0),
                        hp({1, 1, 1}, ratio(1, 2))});
}

inline Arrangement aff_tri() {
  Arrangement a;
  a.space = Space::Affine;
  a.n = 2;
  a.hyperplanes = {hp({1, 0}, 0), hp({0, 1}, 0), hp({1, 1}, 1)};
  return a;
}

inline std::vector<IntVec> normal_pool(std::size_t n) {
  if (n == 1) return {{1}};
  if (n == 2) return {{1, 0}, {0, 1}, {1, 1}, {1, -1}, {1, 2}, {2, 1}, {1, -2}};
  return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, -1, 0}, {1, 1, 1}, {0, 1, -1}};
}

// Valid random toric arrangement with `count` hyperplanes, offsets with denominators ≤ 4.
inline Arrangement random_toric(std::mt19937_64& rng, std::size_t n, std::size_t count) {
  const auto pool = normal_pool(n);
  for (;;) {
    std::vector<Hyperplane> hs;
    for (std::size_t i = 0; i < count; ++i) {
      const auto q = static_cast<long>(1 + rng() % 4);
      const auto p = static_cast<long>(rng() % static_cast<std::uint64_t>(q));
      hs.push_back(hp(pool[rng() % pool.size()], ratio(p, q)));
    }
    Arrangement a = make_toric(n, hs);
    if (validate_toric(a).valid) return a;
  }
}

inline Vec random_vec(std::mt19937_64& rng, std::size_t size, long range = 3) {
  Vec v(size);
  for (auto& x : v) x = Rational(static_cast<long>(rng() % static_cast<std::uint64_t>(2 * range + 1)) - range);
  return v;
}

inline std::string describe(const Arrangement& a) {
  std::string s = std::to_string(a.n) + "D:";
  for (const auto& h : a.hyperplanes) s += " " + to_string(h.normal) + "=" + to_string(h.offset);
  return s;
}

}  // namespace arrangeval::testing
