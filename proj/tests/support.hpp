#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <vector>

#include "stanley/monomial_ideal.hpp"

namespace testsupport {

// One seed per test run, printed by the runner. STANLEY_TEST_SEED overrides.
inline std::uint64_t global_seed() {
  static const std::uint64_t seed = [] {
    if (const char* env = std::getenv("STANLEY_TEST_SEED")) {
      char* end = nullptr;
      unsigned long long value = std::strtoull(env, &end, 10);
      if (end && *end == '\0') return static_cast<std::uint64_t>(value);
    }
    return std::uint64_t{20260817};
  }();
  return seed;
}

// Each call site mixes its own stream label into the seed so adding a test
// never shifts the draws of an unrelated one.
inline std::mt19937_64 rng(std::uint64_t stream) {
  return std::mt19937_64(global_seed() ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

inline int draw(std::mt19937_64& r, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(r);
}

inline stanley::ExponentVector random_monomial(std::mt19937_64& r, int n, int max_exp) {
  for (;;) {
    std::vector<int> entries(n);
    for (int j = 0; j < n; ++j) entries[j] = draw(r, 0, max_exp);
    stanley::ExponentVector v(entries);
    if (!v.is_zero()) return v;
  }
}

inline stanley::MonomialIdeal random_ideal(std::mt19937_64& r, int n, int max_gens,
                                           int max_exp) {
  int count = draw(r, 1, max_gens);
  std::vector<stanley::ExponentVector> gens;
  for (int i = 0; i < count; ++i) gens.push_back(random_monomial(r, n, max_exp));
  return stanley::MonomialIdeal(n, gens);
}

// Complete intersection: disjoint consecutive variable blocks with random
// exponents, possibly leaving trailing variables free.
inline stanley::MonomialIdeal random_ci(std::mt19937_64& r, int n, int max_exp) {
  std::vector<stanley::ExponentVector> gens;
  int next = 0;
  while (next < n) {
    int size = draw(r, 1, n - next);
    std::vector<int> entries(n, 0);
    for (int j = next; j < next + size; ++j) entries[j] = draw(r, 1, max_exp);
    gens.emplace_back(entries);
    next += size;
    if (draw(r, 0, 2) == 0) break;  // leave the remaining variables free
  }
  return stanley::MonomialIdeal(n, gens);
}

}  // namespace testsupport
