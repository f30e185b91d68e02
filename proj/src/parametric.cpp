#include "parakp/parametric.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <utility>

#include "parakp/greedy_half.hpp"
#include "parakp/knapsack_core.hpp"
#include "parakp/oracle.hpp"
#include "parakp/subdivision.hpp"

namespace parakp {

namespace {

using Clock = std::chrono::steady_clock;

double ms_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::milli>(b - a).count();
}

void check_epsilon(const Rational& eps) {
  if (!(Rational(0) < eps && eps < Rational(1))) {
    throw std::invalid_argument("epsilon must lie in (0,1)");
  }
}

std::unique_ptr<KnapsackSolver> make_inner(SolveMode mode, const Rational& eps,
                                           long long profit_bound) {
  if (mode == SolveMode::fptas_inner) return std::make_unique<LawlerFptasSolver>(eps);
  auto solver = std::make_unique<ExactDpSolver>();
  solver->set_profit_bound(profit_bound);
  return solver;
}

}  // namespace

const char* to_string(SolveMode mode) {
  return mode == SolveMode::exact_inner ? "exact_inner" : "fptas_inner";
}

std::size_t SolutionSchedule::locate(const Rational& x) const {
  if (criticals.empty()) return 0;
  const auto it = std::lower_bound(criticals.begin(), criticals.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - criticals.begin());
  if (i < criticals.size() && criticals[i] == x) return 2 * i + 1;  // single point
  return 2 * i;
}

SolutionSchedule solve_parametric(const Instance& raw, const Rational& eps, SolveMode mode,
                                  unsigned threads) {
  const Instance instance = validate_instance(raw);
  check_epsilon(eps);

  // fptas_inner spends eps/2 on scaling and eps/2 on the inner solver.
  const Rational eff = mode == SolveMode::fptas_inner ? eps / Rational(2) : eps;
  const int n = instance.size();

  const auto t0 = Clock::now();
  const HalfApproxFunction phi = compute_phi(instance);
  const auto t1 = Clock::now();

  std::vector<Rational> criticals = critical_lambdas(instance, phi, eff);
  std::vector<Interval> intervals = build_intervals(criticals);
  const PhiZeroRegion zero = phi_zero_region(phi.phi);
  const auto t2 = Clock::now();

  const long long profit_bound = to_long_long((Rational(2 * n) / eff).floor());
  std::vector<long long> weights(instance.items.size());
  for (std::size_t i = 0; i < weights.size(); ++i) weights[i] = instance.items[i].weight;

  std::vector<KnapsackSolution> solutions(intervals.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&]() {
    try {
      const std::unique_ptr<KnapsackSolver> inner = make_inner(mode, eff, profit_bound);
      std::vector<std::optional<long long>> scaled(weights.size());
      while (true) {
        const std::size_t idx = next.fetch_add(1);
        if (idx >= intervals.size()) break;
        const Rational rep = representative_lambda(intervals[idx]);
        if (zero.contains(rep)) {
          solutions[idx] = KnapsackSolution::empty();  // p* = 0 on this interval
          continue;
        }
        const Rational phi_value = phi.phi.value(rep);
        for (std::size_t i = 0; i < weights.size(); ++i) {
          scaled[i] = scaled_profit_value(instance.items[i].profit_at(rep), phi_value, n, eff);
        }
        const IntegerSolution picked =
            solve_scaled_subproblem(scaled, weights, instance.capacity, *inner);
        solutions[idx] = KnapsackSolution::from_selection(instance, picked.selected);
      }
    } catch (...) {
      const std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(intervals.size());
    }
  };

  unsigned worker_count = threads != 0 ? threads : std::thread::hardware_concurrency();
  if (worker_count == 0) worker_count = 1;
  worker_count = static_cast<unsigned>(
      std::min<std::size_t>(worker_count, std::max<std::size_t>(intervals.size(), 1)));
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  const auto t3 = Clock::now();

  SolutionSchedule schedule;
  schedule.epsilon = eps;
  schedule.mode = mode;
  schedule.criticals = std::move(criticals);
  schedule.entries.reserve(intervals.size());
  for (std::size_t idx = 0; idx < intervals.size(); ++idx) {
    schedule.entries.push_back(
        ScheduleEntry{std::move(intervals[idx]), std::move(solutions[idx])});
  }
  schedule.stats.phi_segments = phi.phi.segment_count();
  schedule.stats.critical_count = schedule.criticals.size();
  schedule.stats.interval_count = schedule.entries.size();
  schedule.stats.phi_ms = ms_between(t0, t1);
  schedule.stats.subdivision_ms = ms_between(t1, t2);
  schedule.stats.solve_ms = ms_between(t2, t3);
  schedule.stats.total_ms = ms_between(t0, t3);
  return schedule;
}

QueryResult query(const SolutionSchedule& schedule, const Rational& x) {
  if (schedule.entries.empty()) throw std::invalid_argument("empty schedule");
  QueryResult result;
  result.index = schedule.locate(x);
  result.entry = &schedule.entries[result.index];
  result.profit = result.entry->solution.profit_at(x);
  return result;
}

namespace {

// sched - factor * pstar as an affine function.
struct Difference {
  Rational intercept;
  Rational slope;
  Rational value(const Rational& x) const { return intercept + x * slope; }
};

// Searches the open piece (lo, hi) for a point where the difference is
// negative; interior_rep must lie inside. Returns nullopt when D >= 0 on
// the whole piece.
std::optional<Rational> negative_witness(const Difference& d, const std::optional<Rational>& lo,
                                         const std::optional<Rational>& hi,
                                         const Rational& interior_rep) {
  if (d.value(interior_rep).sign() < 0) return interior_rep;
  // D(rep) >= 0: any remaining violation needs a sign change, so slope != 0.
  if (lo) {
    if (d.value(*lo).sign() < 0) {
      const Rational root = -d.intercept / d.slope;
      return (*lo + root) / Rational(2);
    }
  } else if (d.slope.sign() > 0) {  // D -> -inf toward -inf
    return -d.intercept / d.slope - Rational(1);
  }
  if (hi) {
    if (d.value(*hi).sign() < 0) {
      const Rational root = -d.intercept / d.slope;
      return (root + *hi) / Rational(2);
    }
  } else if (d.slope.sign() < 0) {  // D -> -inf toward +inf
    return -d.intercept / d.slope + Rational(1);
  }
  return std::nullopt;
}

}  // namespace

CertifyReport certify(const SolutionSchedule& schedule, const Instance& instance,
                      const Rational& eps) {
  check_epsilon(eps);
  if (schedule.entries.size() != 2 * schedule.criticals.size() + 1) {
    throw std::invalid_argument("schedule intervals do not match its critical values");
  }
  const Instance checked = validate_instance(instance);
  const ExactProfitFunction oracle = brute_force_parametric(checked);
  const Rational factor = Rational(1) - eps;

  CertifyReport report;
  auto check_point = [&](const Rational& lambda) {
    const QueryResult at = query(schedule, lambda);
    const Rational optimum = oracle.function.value(lambda);
    if (at.profit < factor * optimum) {
      report.violations.push_back({lambda, at.profit, optimum});
    }
    if (optimum.sign() > 0) {
      Rational ratio = at.profit / optimum;
      if (!report.worst_ratio || ratio < *report.worst_ratio) report.worst_ratio = ratio;
    }
    ++report.points_checked;
  };

  // Infeasible stored solutions are failures regardless of profit.
  for (const ScheduleEntry& entry : schedule.entries) {
    if (!entry.solution.feasible_for(checked)) {
      const Rational rep = representative_lambda(entry.interval);
      report.violations.push_back(
          {rep, entry.solution.profit_at(rep), oracle.function.value(rep)});
    }
  }

  // Pointwise checks at every breakpoint of either function and at every
  // interval representative.
  std::vector<Rational> points(oracle.function.breakpoints());
  points.insert(points.end(), schedule.criticals.begin(), schedule.criticals.end());
  for (const ScheduleEntry& entry : schedule.entries) {
    points.push_back(representative_lambda(entry.interval));
  }
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  for (const Rational& lambda : points) check_point(lambda);

  // Both profits are affine between consecutive cuts, so endpoint and ray
  // checks per piece extend the pointwise result to all of R.
  std::vector<Rational> cuts(oracle.function.breakpoints());
  cuts.insert(cuts.end(), schedule.criticals.begin(), schedule.criticals.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  for (std::size_t piece = 0; piece <= cuts.size(); ++piece) {
    const std::optional<Rational> lo =
        piece == 0 ? std::nullopt : std::optional<Rational>(cuts[piece - 1]);
    const std::optional<Rational> hi =
        piece == cuts.size() ? std::nullopt : std::optional<Rational>(cuts[piece]);
    Rational rep(0);
    if (lo && hi) {
      rep = (*lo + *hi) / Rational(2);
    } else if (lo) {
      rep = *lo + Rational(1);
    } else if (hi) {
      rep = *hi - Rational(1);
    }

    const AffineFunction& sched_line = query(schedule, rep).entry->solution.profit_line;
    const AffineFunction& oracle_line = oracle.function.line(oracle.function.locate(rep));
    const Difference d{sched_line.intercept - factor * oracle_line.intercept,
                       sched_line.slope - factor * oracle_line.slope};
    if (const auto witness = negative_witness(d, lo, hi, rep)) {
      report.violations.push_back({*witness, query(schedule, *witness).profit,
                                   oracle.function.value(*witness)});
    }
    ++report.pieces_checked;
  }

  return report;
}

}  // namespace parakp
