#ifndef PARAKP_KNAPSACK_CORE_HPP
#define PARAKP_KNAPSACK_CORE_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "parakp/rational.hpp"

namespace parakp {

/// Non-parametric knapsack with fixed integer profits (negatives allowed;
/// they are never packed).
struct IntegerProfitInstance {
  long long capacity = 0;
  std::vector<long long> weights;
  std::vector<long long> profits;

  int size() const { return static_cast<int>(weights.size()); }
};

/// Selection over an IntegerProfitInstance; profit is the plain integer sum.
struct IntegerSolution {
  std::vector<int> selected;  // 0-based, strictly increasing
  long long total_weight = 0;
  long long total_profit = 0;
};

/// Minimum-weight DP table: weight(k, p) is the least weight reaching
/// profit exactly p using non-negative-profit items among the first k.
/// capacity + 1 acts as the infeasibility sentinel.
class DpTable {
 public:
  /// Fills the table for the given instance; reuses storage across calls.
  void build(const IntegerProfitInstance& instance, long long profit_bound);

  long long weight(std::size_t k, long long p) const {
    return rows_[k * cols_ + static_cast<std::size_t>(p)];
  }
  std::size_t items() const { return items_; }
  long long bound() const { return static_cast<long long>(cols_) - 1; }
  long long sentinel() const { return sentinel_; }

 private:
  std::size_t items_ = 0;
  std::size_t cols_ = 0;
  long long sentinel_ = 0;
  std::vector<long long> rows_;
};

/// Best solution encoded in a filled table, reconstructed by backtracking;
/// equal-profit choices prefer not packing.
IntegerSolution extract_best(const DpTable& table, const IntegerProfitInstance& instance);

/// Exact optimum over non-negative-profit items. profit_bound must be a
/// valid upper bound on any feasible solution's profit; pass kAutoBound to
/// use the sum of positive profits.
inline constexpr long long kAutoBound = -1;
IntegerSolution dp_exact(const IntegerProfitInstance& instance,
                         long long profit_bound = kAutoBound);
IntegerSolution dp_exact(const IntegerProfitInstance& instance, long long profit_bound,
                         DpTable& scratch);

/// Greedy prefix-vs-best-single half-approximation at fixed profits.
IntegerSolution greedy_half_integer(const IntegerProfitInstance& instance);

/// Scaling FPTAS: run the DP on floor(p_i / M) with M = eps * pbar / n and
/// re-price the winning selection at the original profits. Requires
/// opt/2 <= pbar <= opt (e.g. a greedy half-approximation value) and
/// eps in (0,1); the result is within (1-eps) of optimal. Instances whose
/// positive profits sum to zero short-circuit to the empty solution.
IntegerSolution lawler_fptas(const IntegerProfitInstance& instance, const Rational& eps,
                             const Rational& pbar);

/// Pluggable fixed-profit solver: profit at least guarantee() times the
/// optimum over non-negative-profit items. Implementations may reuse
/// internal scratch space, so share one instance per thread only.
class KnapsackSolver {
 public:
  virtual ~KnapsackSolver() = default;
  virtual IntegerSolution solve(const IntegerProfitInstance& instance) const = 0;
  virtual Rational guarantee() const = 0;
};

class ExactDpSolver final : public KnapsackSolver {
 public:
  IntegerSolution solve(const IntegerProfitInstance& instance) const override;
  Rational guarantee() const override { return Rational(1); }

  /// Optional tighter profit bound applied to every solve (the parametric
  /// driver passes floor(2n/eps)).
  void set_profit_bound(long long bound) { profit_bound_ = bound; }

 private:
  long long profit_bound_ = kAutoBound;
  mutable DpTable scratch_;
};

class LawlerFptasSolver final : public KnapsackSolver {
 public:
  explicit LawlerFptasSolver(Rational eps);
  IntegerSolution solve(const IntegerProfitInstance& instance) const override;
  Rational guarantee() const override { return Rational(1) - eps_; }

 private:
  Rational eps_;
};

/// Drops excluded items, solves the remainder with the inner solver, and
/// maps the selection back to the original item indices. The reported
/// profit is in the scaled units the solver saw.
IntegerSolution solve_scaled_subproblem(std::span<const std::optional<long long>> scaled_profits,
                                        std::span<const long long> weights, long long capacity,
                                        const KnapsackSolver& inner);

}  // namespace parakp

#endif  // PARAKP_KNAPSACK_CORE_HPP
