#ifndef PARAKP_TEST_SUPPORT_HPP
#define PARAKP_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "parakp/generator.hpp"
#include "parakp/knapsack_core.hpp"
#include "parakp/model.hpp"

namespace parakp::test {

inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

inline long long draw_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

inline Rational random_rational(std::mt19937_64& rng, long long numerator_mag = 50,
                                long long denominator_max = 10) {
  return Rational(draw_in(rng, -numerator_mag, numerator_mag),
                  draw_in(rng, 1, denominator_max));
}

/// Seeded instance matching the acceptance corpus shape: n in [1, max_n],
/// weights in [1, w_max], coefficients in [-c_max, c_max], half-total
/// capacity.
inline Instance corpus_instance(std::uint64_t seed, int max_n = 10, long long w_max = 10,
                                long long c_max = 10) {
  std::mt19937_64 pick(seed * 1000003ULL + 17);
  GeneratorConfig config;
  config.n = static_cast<int>(1 + bounded(pick, static_cast<std::uint64_t>(max_n)));
  config.seed = seed;
  config.weight_max = w_max;
  config.coeff_max = c_max;
  return random_instance(config);
}

inline IntegerProfitInstance random_integer_instance(std::uint64_t seed, int max_n = 12,
                                                     long long w_max = 15,
                                                     long long p_mag = 30) {
  std::mt19937_64 rng(seed * 2654435761ULL + 7);
  IntegerProfitInstance instance;
  const int n = static_cast<int>(1 + bounded(rng, static_cast<std::uint64_t>(max_n)));
  long long total = 0;
  long long heaviest = 1;
  for (int i = 0; i < n; ++i) {
    const long long w = draw_in(rng, 1, w_max);
    instance.weights.push_back(w);
    instance.profits.push_back(draw_in(rng, -p_mag, p_mag));
    total += w;
    heaviest = std::max(heaviest, w);
  }
  instance.capacity = std::max((total + 1) / 2, heaviest);
  return instance;
}

/// 2^n reference optimum over feasible subsets (the empty one included).
inline long long brute_force_integer_optimum(const IntegerProfitInstance& instance) {
  const int n = instance.size();
  long long best = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    long long weight = 0;
    long long profit = 0;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        weight += instance.weights[static_cast<std::size_t>(i)];
        profit += instance.profits[static_cast<std::size_t>(i)];
      }
    }
    if (weight <= instance.capacity && profit > best) best = profit;
  }
  return best;
}

/// Convexity probe: f(mid) must not exceed the chord through two outer
/// sample points.
inline bool convex_by_chords(const PiecewiseLinearFunction& f, std::mt19937_64& rng,
                             int trials = 200) {
  for (int t = 0; t < trials; ++t) {
    Rational a = random_rational(rng, 100, 8);
    Rational b = random_rational(rng, 100, 8);
    Rational c = random_rational(rng, 100, 8);
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == b || b == c) continue;
    const Rational chord =
        f.value(a) + (f.value(c) - f.value(a)) * (b - a) / (c - a);
    if (f.value(b) > chord) return false;
  }
  return true;
}

}  // namespace parakp::test

#endif  // PARAKP_TEST_SUPPORT_HPP
