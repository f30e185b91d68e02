#ifndef PARAKP_SUBDIVISION_HPP
#define PARAKP_SUBDIVISION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "parakp/greedy_half.hpp"
#include "parakp/model.hpp"

namespace parakp {

/// Scaled integer profit floor(n * p(x) / (eps * phi(x))) for one item
/// against the phi segment covering x. Returns nullopt when the item's
/// profit is negative at x (such items never help an optimal solution and
/// are dropped). Throws std::domain_error when the segment value at x is
/// not positive; the caller must route that case to the all-zero solution.
std::optional<long long> scaled_profit(const Item& item, const AffineFunction& phi_segment,
                                       int n, const Rational& eps, const Rational& lambda);

/// Same computation from already-evaluated profit and phi values.
std::optional<long long> scaled_profit_value(const Rational& profit, const Rational& phi_value,
                                             int n, const Rational& eps);

enum class RunDirection { nondecreasing, nonincreasing };

/// A maximal consecutive group of phi segments on which the profit ratio
/// f(x) = p(x) / phi(x) is monotone (segment indices first..last, closed).
struct MonotoneRun {
  std::size_t first = 0;
  std::size_t last = 0;
  RunDirection direction = RunDirection::nondecreasing;
};

/// The ratio p/phi of an item changes direction at most twice over a
/// convex phi: grouping the per-segment derivative signs
/// sign(b * alpha_j - a * beta_j) gives at most three monotone runs
/// (zero signs are absorbed into the running group).
struct MonotonePartition {
  std::vector<MonotoneRun> runs;
};

/// Single left-to-right scan of the segment sign tests. Throws
/// std::logic_error on more than two sign changes, which would mean phi is
/// not convex.
MonotonePartition monotone_partition(const Item& item, const PiecewiseLinearFunction& phi);

/// The closed set {x : phi(x) = 0}; by convexity and phi >= 0 it is a
/// single closed interval, possibly empty or unbounded. nullopt bounds
/// mark unbounded sides.
struct PhiZeroRegion {
  bool exists = false;
  std::optional<Rational> lower;
  std::optional<Rational> upper;

  bool contains(const Rational& x) const {
    if (!exists) return false;
    if (lower && x < *lower) return false;
    if (upper && *upper < x) return false;
    return true;
  }
};

PhiZeroRegion phi_zero_region(const PiecewiseLinearFunction& phi);

/// Every parameter value where some scaled profit changes its integer
/// value or its excluded status, plus all item-profit roots, phi
/// breakpoints, and boundaries of the phi = 0 region. Sorted, distinct.
std::vector<Rational> critical_lambdas(const Instance& instance, const HalfApproxFunction& phi,
                                       const Rational& eps);

/// k critical values -> 2k+1 intervals alternating open and single-point:
/// (-inf,c1), [c1,c1], (c1,c2), ..., (ck,+inf). No criticals -> the whole
/// line.
std::vector<Interval> build_intervals(std::span<const Rational> criticals);

/// A point inside the interval: the value itself for single points, the
/// midpoint for bounded open intervals, boundary -/+ 1 for unbounded ones,
/// zero for the whole line.
Rational representative_lambda(const Interval& interval);

}  // namespace parakp

#endif  // PARAKP_SUBDIVISION_HPP
