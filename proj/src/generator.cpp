#include "parakp/generator.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace parakp {

namespace {

// Unbiased draw from [0, n); rejection keeps the stream identical across
// platforms (std::uniform_int_distribution is implementation-defined).
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t limit = n * (UINT64_MAX / n);
  std::uint64_t x = rng();
  while (x >= limit) x = rng();
  return x % n;
}

long long draw_in(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  bounded(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace

Instance random_instance(const GeneratorConfig& config) {
  if (config.n < 1) throw std::invalid_argument("generator needs n >= 1");
  if (config.weight_max < 1) throw std::invalid_argument("weight_max must be >= 1");
  if (config.coeff_max < 0) throw std::invalid_argument("coeff_max must be >= 0");
  if (config.fixed_capacity && *config.fixed_capacity < 1) {
    throw std::invalid_argument("fixed capacity must be >= 1");
  }

  std::mt19937_64 rng(config.seed);
  long long weight_cap = config.weight_max;
  if (config.fixed_capacity) weight_cap = std::min(weight_cap, *config.fixed_capacity);

  Instance instance;
  long long total_weight = 0;
  long long max_weight = 1;
  for (int i = 0; i < config.n; ++i) {
    Item item;
    item.weight = draw_in(rng, 1, weight_cap);
    item.intercept = draw_in(rng, -config.coeff_max, config.coeff_max);
    item.slope = draw_in(rng, -config.coeff_max, config.coeff_max);
    total_weight += item.weight;
    max_weight = std::max(max_weight, item.weight);
    instance.items.push_back(item);
  }

  if (config.fixed_capacity) {
    instance.capacity = *config.fixed_capacity;
  } else {
    instance.capacity = std::max((total_weight + 1) / 2, max_weight);
  }
  return validate_instance(std::move(instance));
}

}  // namespace parakp
