// Acceptance suite: every release criterion as one pass/fail line, all in
// exact arithmetic. Exit code is the number of failed criteria.

#include <chrono>
#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "parakp/bench.hpp"
#include "parakp/envelope.hpp"
#include "parakp/greedy_half.hpp"
#include "parakp/knapsack_core.hpp"
#include "parakp/oracle.hpp"
#include "parakp/parametric.hpp"
#include "parakp/subdivision.hpp"
#include "../support/test_support.hpp"

namespace {

using namespace parakp;
using Clock = std::chrono::steady_clock;

constexpr int kCorpusSize = 200;
const std::vector<Rational> kEpsilons{Rational(1, 2), Rational(1, 4)};

const std::vector<Instance>& corpus() {
  static const std::vector<Instance> instances = [] {
    std::vector<Instance> all;
    for (std::uint64_t seed = 1; seed <= kCorpusSize; ++seed) {
      all.push_back(test::corpus_instance(seed, 10, 10, 10));
    }
    return all;
  }();
  return instances;
}

std::vector<AffineFunction> envelope_line_set(std::mt19937_64& rng, int count) {
  std::vector<AffineFunction> lines;
  for (int i = 0; i < count; ++i) {
    lines.emplace_back(test::random_rational(rng, 30, 6), test::random_rational(rng, 12, 4));
  }
  return lines;
}

// 1. (1-eps)-optimality of both modes over the seeded corpus, certified
//    against the exact oracle with zero tolerance.
bool approximation_guarantee(std::ostream& log) {
  std::size_t runs = 0;
  std::size_t bad = 0;
  const auto start = Clock::now();
  for (std::size_t idx = 0; idx < corpus().size(); ++idx) {
    const Instance& inst = corpus()[idx];
    for (const Rational& eps : kEpsilons) {
      for (const SolveMode mode : {SolveMode::exact_inner, SolveMode::fptas_inner}) {
        const SolutionSchedule schedule = solve_parametric(inst, eps, mode, 1);
        const CertifyReport report = certify(schedule, inst, eps);
        ++runs;
        if (!report.ok()) {
          ++bad;
          log << "  violated: seed " << idx + 1 << " eps " << eps << " mode "
              << to_string(mode) << " at lambda " << report.violations.front().lambda << "\n";
        }
      }
    }
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  log << "  " << runs << " solve+certify runs, " << bad << " violations, " << seconds
      << " s\n";
  return bad == 0 && seconds < 120.0;
}

// 2. (1/2) p* <= phi <= p* at every breakpoint of either function.
bool half_approximation_sandwich(std::ostream& log) {
  std::size_t points = 0;
  std::size_t bad = 0;
  for (const Instance& inst : corpus()) {
    const HalfApproxFunction phi = compute_phi(inst);
    const ExactProfitFunction oracle = brute_force_parametric(inst);
    std::vector<Rational> probes(phi.phi.breakpoints());
    probes.insert(probes.end(), oracle.function.breakpoints().begin(),
                  oracle.function.breakpoints().end());
    if (probes.empty()) {
      probes.push_back(Rational(0));
    } else {
      probes.push_back(probes.front() - Rational(1));
      probes.push_back(probes.back() + Rational(1));
    }
    for (const Rational& x : probes) {
      const Rational smoothed = phi.phi.value(x);
      const Rational exact = oracle.function.value(x);
      ++points;
      if (!(Rational(2) * smoothed >= exact && smoothed <= exact)) ++bad;
    }
  }
  log << "  " << points << " breakpoint checks, " << bad << " violations\n";
  return bad == 0;
}

// 3. Every attained scaled-profit value covers at most three maximal
//    parameter intervals per item.
bool bounded_value_reoccurrence(std::ostream& log) {
  std::size_t checked_values = 0;
  std::size_t bad = 0;
  for (const Instance& inst : corpus()) {
    const HalfApproxFunction phi = compute_phi(inst);
    for (const Rational& eps : kEpsilons) {
      const std::vector<Interval> intervals =
          build_intervals(critical_lambdas(inst, phi, eps));
      for (int item = 0; item < inst.size(); ++item) {
        std::map<long long, int> blocks;
        std::optional<long long> previous;
        bool previous_defined = false;
        for (const Interval& interval : intervals) {
          const Rational rep = representative_lambda(interval);
          const Rational phi_value = phi.phi.value(rep);
          std::optional<long long> value;
          const bool defined = phi_value.sign() > 0;
          if (defined) {
            value = scaled_profit_value(
                inst.items[static_cast<std::size_t>(item)].profit_at(rep), phi_value,
                inst.size(), eps);
          }
          if (defined && value &&
              (!previous_defined || !previous || *previous != *value)) {
            ++blocks[*value];
          }
          previous = value;
          previous_defined = defined;
        }
        for (const auto& [value, count] : blocks) {
          ++checked_values;
          if (count > 3) {
            ++bad;
            log << "  value " << value << " attained " << count << " times (item "
                << item + 1 << ")\n";
          }
        }
      }
    }
  }
  log << "  " << checked_values << " (item, value) pairs, " << bad << " exceptions\n";
  return bad == 0;
}

// 4. The minimum-weight DP equals 2^n enumeration.
bool dp_oracle_equivalence(std::ostream& log) {
  std::size_t bad = 0;
  const auto start = Clock::now();
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const IntegerProfitInstance inst = test::random_integer_instance(seed, 12, 15, 30);
    const IntegerSolution best = dp_exact(inst);
    if (best.total_profit != test::brute_force_integer_optimum(inst)) ++bad;
    long long weight = 0;
    for (const int i : best.selected) weight += inst.weights[static_cast<std::size_t>(i)];
    if (weight != best.total_weight || weight > inst.capacity) ++bad;
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  log << "  500 instances, " << bad << " mismatches, " << seconds << " s\n";
  return bad == 0 && seconds < 60.0;
}

// 5. The scaling FPTAS loses at most a (1-eps) factor.
bool inner_fptas_bound(std::ostream& log) {
  std::size_t bad = 0;
  for (std::uint64_t seed = 1; seed <= 500; ++seed) {
    const IntegerProfitInstance inst = test::random_integer_instance(seed + 9000, 12, 15, 30);
    const long long exact = dp_exact(inst).total_profit;
    for (const Rational& eps : {Rational(1, 2), Rational(1, 4), Rational(1, 10)}) {
      const IntegerSolution approx = LawlerFptasSolver(eps).solve(inst);
      if (!(Rational(approx.total_profit) >= (Rational(1) - eps) * Rational(exact))) ++bad;
    }
  }
  log << "  1500 solver runs, " << bad << " bound violations\n";
  return bad == 0;
}

// 6. Interval counts stay under 16 n^2 / eps and grow at most 4.5x when n
//    doubles; whole sweep under ten minutes.
bool interval_count_scaling(std::ostream& log) {
  const std::vector<int> sizes{10, 20, 50, 100};
  const std::vector<Rational> epsilons{Rational(1, 2), Rational(1, 4), Rational(1, 10)};
  const std::vector<std::uint64_t> seeds{11, 12, 13};

  const auto start = Clock::now();
  const std::vector<BenchRow> rows =
      bench_sweep(sizes, epsilons, seeds, SolveMode::exact_inner, 1, nullptr);
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();

  std::size_t over_budget = 0;
  for (const BenchRow& row : rows) {
    if (Integer(static_cast<long>(row.intervals)) > row.interval_budget()) {
      ++over_budget;
      log << "  over budget: n=" << row.n << " eps=" << row.eps << " seed=" << row.seed
          << " intervals=" << row.intervals << "\n";
    }
  }

  auto average_intervals = [&rows](int n, const Rational& eps) {
    double sum = 0;
    int count = 0;
    for (const BenchRow& row : rows) {
      if (row.n == n && row.eps == eps) {
        sum += static_cast<double>(row.intervals);
        ++count;
      }
    }
    return sum / count;
  };

  bool growth_ok = true;
  for (const Rational& eps : epsilons) {
    for (const auto& [small, large] : std::vector<std::pair<int, int>>{{10, 20}, {50, 100}}) {
      const double ratio = average_intervals(large, eps) / average_intervals(small, eps);
      log << "  eps=" << eps << " " << small << "->" << large << " growth " << ratio << "x\n";
      if (ratio > 4.5) growth_ok = false;
    }
  }
  log << "  " << rows.size() << " grid runs, " << over_budget << " over budget, " << seconds
      << " s\n";
  return over_budget == 0 && growth_ok && seconds < 600.0;
}

// 7. Envelopes equal the pointwise maximum, exactly.
bool envelope_correctness(std::ostream& log) {
  std::mt19937_64 rng(777);
  std::size_t bad = 0;
  for (int round = 0; round < 100; ++round) {
    const int m = static_cast<int>(1 + test::bounded(rng, 200));
    const std::vector<AffineFunction> lines = envelope_line_set(rng, m);
    const Envelope env = upper_envelope(lines);
    for (int t = 0; t < 1000; ++t) {
      const Rational x = test::random_rational(rng, 60, 8);
      Rational best = lines.front().value(x);
      for (std::size_t i = 1; i < lines.size(); ++i) {
        const Rational v = lines[i].value(x);
        if (v > best) best = v;
      }
      if (env.function.value(x) != best) ++bad;
    }
  }
  log << "  100 line sets x 1000 points, " << bad << " mismatches\n";
  return bad == 0;
}

// 8. Convexity and continuity of every phi, p*, and envelope output.
bool convexity_continuity(std::ostream& log) {
  std::size_t functions = 0;
  std::size_t bad = 0;
  auto check = [&](const PiecewiseLinearFunction& f) {
    ++functions;
    if (!(f.flagged_convex() && f.continuous() && f.strictly_increasing_slopes())) ++bad;
  };
  for (const Instance& inst : corpus()) {
    check(compute_phi(inst).phi);
    check(brute_force_parametric(inst).function);
  }
  std::mt19937_64 rng(778);
  for (int round = 0; round < 100; ++round) {
    const int m = static_cast<int>(1 + test::bounded(rng, 200));
    check(upper_envelope(envelope_line_set(rng, m)).function);
  }
  log << "  " << functions << " functions checked, " << bad << " exceptions\n";
  return bad == 0;
}

struct Criterion {
  int id;
  const char* name;
  std::function<bool(std::ostream&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "approximation guarantee (both modes, exact certify)", approximation_guarantee},
      {2, "half-approximation sandwich at all breakpoints", half_approximation_sandwich},
      {3, "scaled values attained in <= 3 intervals", bounded_value_reoccurrence},
      {4, "DP equals subset enumeration", dp_oracle_equivalence},
      {5, "inner FPTAS (1-eps) bound", inner_fptas_bound},
      {6, "interval-count scaling and budget", interval_count_scaling},
      {7, "envelope equals pointwise maximum", envelope_correctness},
      {8, "convexity/continuity invariants", convexity_continuity},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = Clock::now();
    std::ostringstream log;
    bool ok = false;
    try {
      ok = criterion.run(log);
    } catch (const std::exception& error) {
      log << "  exception: " << error.what() << "\n";
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << criterion.id << ": "
              << criterion.name << "  (" << seconds << " s)\n"
              << log.str();
    if (!ok) ++failed;
  }
  if (failed == 0) {
    std::cout << "all " << criteria.size() << " acceptance criteria passed\n";
  } else {
    std::cout << failed << " acceptance criteria FAILED\n";
  }
  return failed;
}
