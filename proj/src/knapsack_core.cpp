#include "parakp/knapsack_core.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace parakp {

namespace {

long long positive_profit_sum(const IntegerProfitInstance& instance) {
  long long sum = 0;
  for (const long long p : instance.profits) {
    if (p > 0) sum += p;
  }
  return sum;
}

void check_instance(const IntegerProfitInstance& instance) {
  if (instance.capacity < 0) throw std::invalid_argument("capacity must be non-negative");
  if (instance.weights.size() != instance.profits.size()) {
    throw std::invalid_argument("weights and profits must have equal length");
  }
  for (const long long w : instance.weights) {
    if (w < 1 || w > instance.capacity) {
      throw std::invalid_argument("item weights must lie in [1, capacity]");
    }
  }
}

}  // namespace

void DpTable::build(const IntegerProfitInstance& instance, long long profit_bound) {
  check_instance(instance);
  if (profit_bound < 0) throw std::invalid_argument("profit bound must be non-negative");
  // A bound above the best achievable profit buys nothing; shrink it.
  profit_bound = std::min(profit_bound, positive_profit_sum(instance));

  items_ = instance.weights.size();
  cols_ = static_cast<std::size_t>(profit_bound) + 1;
  sentinel_ = instance.capacity + 1;
  rows_.assign((items_ + 1) * cols_, sentinel_);
  rows_[0] = 0;  // weight(0, 0) = 0

  for (std::size_t k = 1; k <= items_; ++k) {
    const long long pk = instance.profits[k - 1];
    const long long wk = instance.weights[k - 1];
    const long long* prev = rows_.data() + (k - 1) * cols_;
    long long* row = rows_.data() + k * cols_;
    if (pk < 0 || static_cast<std::size_t>(pk) >= cols_) {
      // Never packed at this bound: w(k, p) = w(k-1, p).
      std::copy(prev, prev + cols_, row);
      continue;
    }
    const std::size_t up = static_cast<std::size_t>(pk);
    for (std::size_t p = 0; p < up; ++p) row[p] = prev[p];
    for (std::size_t p = up; p < cols_; ++p) {
      const long long keep = prev[p];
      long long take = prev[p - up] + wk;
      if (take > sentinel_) take = sentinel_;
      row[p] = take < keep ? take : keep;
    }
  }
}

IntegerSolution extract_best(const DpTable& table, const IntegerProfitInstance& instance) {
  const long long capacity = instance.capacity;
  long long best = 0;
  for (long long p = table.bound(); p > 0; --p) {
    if (table.weight(table.items(), p) <= capacity) {
      best = p;
      break;
    }
  }

  IntegerSolution solution;
  long long p = best;
  for (std::size_t k = table.items(); k > 0; --k) {
    if (table.weight(k, p) == table.weight(k - 1, p)) continue;  // not packed
    const int index = static_cast<int>(k) - 1;
    solution.selected.push_back(index);
    solution.total_weight += instance.weights[static_cast<std::size_t>(index)];
    p -= instance.profits[static_cast<std::size_t>(index)];
  }
  std::reverse(solution.selected.begin(), solution.selected.end());
  solution.total_profit = best;
  return solution;
}

IntegerSolution dp_exact(const IntegerProfitInstance& instance, long long profit_bound) {
  DpTable table;
  return dp_exact(instance, profit_bound, table);
}

IntegerSolution dp_exact(const IntegerProfitInstance& instance, long long profit_bound,
                         DpTable& scratch) {
  if (profit_bound == kAutoBound) profit_bound = positive_profit_sum(instance);
  scratch.build(instance, profit_bound);
  return extract_best(scratch, instance);
}

IntegerSolution greedy_half_integer(const IntegerProfitInstance& instance) {
  check_instance(instance);
  const int n = instance.size();

  std::vector<int> order;
  for (int i = 0; i < n; ++i) {
    if (instance.profits[static_cast<std::size_t>(i)] >= 0) order.push_back(i);
  }
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto lhs = static_cast<__int128>(instance.profits[static_cast<std::size_t>(a)]) *
                     instance.weights[static_cast<std::size_t>(b)];
    const auto rhs = static_cast<__int128>(instance.profits[static_cast<std::size_t>(b)]) *
                     instance.weights[static_cast<std::size_t>(a)];
    if (lhs != rhs) return lhs > rhs;
    return a < b;
  });

  IntegerSolution prefix;
  long long remaining = instance.capacity;
  for (const int i : order) {
    const long long w = instance.weights[static_cast<std::size_t>(i)];
    if (w > remaining) break;
    remaining -= w;
    prefix.selected.push_back(i);
    prefix.total_weight += w;
    prefix.total_profit += instance.profits[static_cast<std::size_t>(i)];
  }
  std::sort(prefix.selected.begin(), prefix.selected.end());

  int best_single = -1;
  long long best_profit = 0;
  for (int i = 0; i < n; ++i) {
    if (instance.profits[static_cast<std::size_t>(i)] > best_profit) {
      best_profit = instance.profits[static_cast<std::size_t>(i)];
      best_single = i;
    }
  }
  if (best_single >= 0 && best_profit > prefix.total_profit) {
    return IntegerSolution{{best_single},
                           instance.weights[static_cast<std::size_t>(best_single)],
                           best_profit};
  }
  return prefix;
}

IntegerSolution lawler_fptas(const IntegerProfitInstance& instance, const Rational& eps,
                             const Rational& pbar) {
  check_instance(instance);
  if (!(Rational(0) < eps && eps < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
  if (positive_profit_sum(instance) == 0) return IntegerSolution{};
  if (pbar.sign() <= 0) {
    throw std::invalid_argument("pbar must be positive for a non-degenerate instance");
  }

  const int n = instance.size();
  const Rational m = eps * pbar / Rational(n);  // scaling unit M
  IntegerProfitInstance scaled = instance;
  for (long long& p : scaled.profits) {
    p = to_long_long((Rational(p) / m).floor());
  }
  const long long bound = to_long_long((Rational(2 * n) / eps).floor());

  IntegerSolution solution = dp_exact(scaled, bound);
  solution.total_profit = 0;
  for (const int i : solution.selected) {
    solution.total_profit += instance.profits[static_cast<std::size_t>(i)];
  }
  return solution;
}

IntegerSolution ExactDpSolver::solve(const IntegerProfitInstance& instance) const {
  long long bound = profit_bound_;
  if (bound == kAutoBound) bound = positive_profit_sum(instance);
  scratch_.build(instance, bound);
  return extract_best(scratch_, instance);
}

LawlerFptasSolver::LawlerFptasSolver(Rational eps) : eps_(std::move(eps)) {
  if (!(Rational(0) < eps_ && eps_ < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
}

IntegerSolution LawlerFptasSolver::solve(const IntegerProfitInstance& instance) const {
  const IntegerSolution half = greedy_half_integer(instance);
  // Greedy profit 0 certifies that the optimum is 0.
  if (half.total_profit <= 0) return IntegerSolution{};
  return lawler_fptas(instance, eps_, Rational(half.total_profit));
}

IntegerSolution solve_scaled_subproblem(std::span<const std::optional<long long>> scaled_profits,
                                        std::span<const long long> weights, long long capacity,
                                        const KnapsackSolver& inner) {
  if (scaled_profits.size() != weights.size()) {
    throw std::invalid_argument("profits and weights must have equal length");
  }
  IntegerProfitInstance reduced;
  reduced.capacity = capacity;
  std::vector<int> original_index;
  for (std::size_t i = 0; i < scaled_profits.size(); ++i) {
    if (!scaled_profits[i]) continue;  // excluded
    reduced.weights.push_back(weights[i]);
    reduced.profits.push_back(*scaled_profits[i]);
    original_index.push_back(static_cast<int>(i));
  }
  if (reduced.weights.empty()) return IntegerSolution{};

  IntegerSolution solution = inner.solve(reduced);
  for (int& i : solution.selected) i = original_index[static_cast<std::size_t>(i)];
  return solution;
}

}  // namespace parakp
