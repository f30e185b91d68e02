#ifndef PARAKP_GREEDY_HALF_HPP
#define PARAKP_GREEDY_HALF_HPP

#include <vector>

#include "parakp/model.hpp"

namespace parakp {

/// A parameter value where the greedy item ordering can change: either two
/// profit/weight ratios cross, or an item's profit changes sign.
struct OrderingEvent {
  enum class Kind { profit_sign_change, ratio_crossing };

  Rational lambda;
  Kind kind = Kind::profit_sign_change;
  int first_item = -1;   // 0-based
  int second_item = -1;  // crossing partner; -1 for sign changes
};

/// All parameter values where the ratio order or the non-negative item set
/// can change, sorted and with duplicates merged (the first cause wins).
std::vector<OrderingEvent> ordering_events(const Instance& instance);

/// The classic greedy at a fixed parameter: among items with non-negative
/// profit sorted by decreasing profit/weight ratio (ties by index), pack
/// the maximal prefix that fits, then return the better of that prefix and
/// the best single item. Profit is at least half the fixed-parameter
/// optimum.
KnapsackSolution greedy_half_fixed(const Instance& instance, const Rational& lambda);

/// Candidate lines for the smoothed half-approximation: one greedy prefix
/// line per elementary ordering interval, every item line, and zero.
/// Deduplicated by line; each line keeps a feasible witness selection.
struct CandidateLines {
  std::vector<AffineFunction> lines;
  std::vector<KnapsackSolution> witnesses;  // parallel to lines
};

CandidateLines candidate_lines(const Instance& instance);

/// The smoothed parametric half-approximation phi: convex, continuous,
/// and (1/2) p*(x) <= phi(x) <= p*(x) everywhere, with a feasible witness
/// solution realizing every segment.
struct HalfApproxFunction {
  PiecewiseLinearFunction phi;
  std::vector<KnapsackSolution> witnesses;  // per segment
};

HalfApproxFunction compute_phi(const Instance& instance);

}  // namespace parakp

#endif  // PARAKP_GREEDY_HALF_HPP
