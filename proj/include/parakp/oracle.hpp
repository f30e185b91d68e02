#ifndef PARAKP_ORACLE_HPP
#define PARAKP_ORACLE_HPP

#include <vector>

#include "parakp/model.hpp"

namespace parakp {

/// Hard cap for the 2^n enumerations below.
inline constexpr int kMaxOracleItems = 20;

/// The exact optimal profit function p*: upper envelope of the profit
/// lines of all feasible subsets (the empty subset supplies the zero
/// line), with an optimal selection witnessing every segment.
struct ExactProfitFunction {
  PiecewiseLinearFunction function;
  std::vector<KnapsackSolution> witnesses;  // per segment
};

/// Enumerates feasible subsets (weight-pruned recursion), keeps only the
/// best intercept per slope, and builds the envelope. Refuses n > 20.
ExactProfitFunction brute_force_parametric(const Instance& instance);

/// Maximum-profit feasible subset at a fixed parameter; profit ties prefer
/// the lexicographically smallest index set. Refuses n > 20.
KnapsackSolution brute_force_fixed(const Instance& instance, const Rational& lambda);

}  // namespace parakp

#endif  // PARAKP_ORACLE_HPP
