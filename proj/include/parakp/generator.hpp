#ifndef PARAKP_GENERATOR_HPP
#define PARAKP_GENERATOR_HPP

#include <cstdint>
#include <optional>

#include "parakp/model.hpp"

namespace parakp {

/// Deterministic random-instance recipe: the same config always yields the
/// same instance, independent of platform.
struct GeneratorConfig {
  int n = 10;
  std::uint64_t seed = 0;
  long long weight_max = 10;                  // weights uniform in [1, weight_max]
  long long coeff_max = 10;                   // a, b uniform in [-coeff_max, coeff_max]
  std::optional<long long> fixed_capacity;    // default: half-total-weight rule
};

/// Draws the items, then sets W = ceil(total weight / 2) under the default
/// rule (raised to the largest single weight so every item stays packable).
/// A fixed capacity caps the weight draws at the capacity instead.
Instance random_instance(const GeneratorConfig& config);

}  // namespace parakp

#endif  // PARAKP_GENERATOR_HPP
