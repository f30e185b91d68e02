#ifndef PARAKP_ENVELOPE_HPP
#define PARAKP_ENVELOPE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parakp/model.hpp"

namespace parakp {

/// Intersection parameter of two lines, if the slopes differ. Parallel
/// (including identical) lines have no single crossing and yield nullopt.
std::optional<Rational> intersect(const AffineFunction& f, const AffineFunction& g);

/// Upper envelope of a line set, with the realizing input line per segment.
struct Envelope {
  PiecewiseLinearFunction function;  // flagged convex
  std::vector<std::size_t> source;   // per segment: index into the input span
};

/// Pointwise maximum of full lines as a convex piecewise-linear function.
/// Sort by slope (keeping only the best intercept per slope), then one
/// convex-hull-style stack pass; O(m log m). Throws on an empty input.
Envelope upper_envelope(std::span<const AffineFunction> lines);

}  // namespace parakp

#endif  // PARAKP_ENVELOPE_HPP
