#include "parakp/envelope.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace parakp {

std::optional<Rational> intersect(const AffineFunction& f, const AffineFunction& g) {
  if (f.slope == g.slope) return std::nullopt;
  return (g.intercept - f.intercept) / (f.slope - g.slope);
}

Envelope upper_envelope(std::span<const AffineFunction> lines) {
  if (lines.empty()) throw std::invalid_argument("upper envelope of an empty line set");

  std::vector<std::size_t> order(lines.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lines[a].slope != lines[b].slope) return lines[a].slope < lines[b].slope;
    if (lines[a].intercept != lines[b].intercept) return lines[a].intercept > lines[b].intercept;
    return a < b;
  });

  // One candidate per slope: the largest intercept (first index on ties).
  std::vector<std::size_t> pool;
  pool.reserve(order.size());
  for (const std::size_t idx : order) {
    if (!pool.empty() && lines[pool.back()].slope == lines[idx].slope) continue;
    pool.push_back(idx);
  }

  // Stack pass over strictly increasing slopes. cuts[k] is where hull[k+1]
  // overtakes hull[k]; the pop rule keeps cuts strictly increasing, so no
  // zero-length segments survive and concurrent crossings merge.
  std::vector<std::size_t> hull;
  std::vector<Rational> cuts;
  for (const std::size_t idx : pool) {
    const AffineFunction& candidate = lines[idx];
    while (!hull.empty()) {
      const Rational takeover = *intersect(candidate, lines[hull.back()]);
      if (!cuts.empty() && takeover <= cuts.back()) {
        hull.pop_back();
        cuts.pop_back();
        continue;
      }
      cuts.push_back(takeover);
      break;
    }
    hull.push_back(idx);
  }

  std::vector<AffineFunction> segments;
  segments.reserve(hull.size());
  for (const std::size_t idx : hull) segments.push_back(lines[idx]);

  return Envelope{PiecewiseLinearFunction(std::move(cuts), std::move(segments), true),
                  std::move(hull)};
}

}  // namespace parakp
