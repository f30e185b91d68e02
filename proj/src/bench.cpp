#include "parakp/bench.hpp"

#include <ostream>

#include "parakp/generator.hpp"

namespace parakp {

Integer interval_budget_for(int n, const Rational& eps) {
  return (Rational(16LL * n * n) / eps).floor();
}

Integer BenchRow::interval_budget() const { return interval_budget_for(n, eps); }

std::vector<BenchRow> bench_sweep(std::span<const int> sizes, std::span<const Rational> epsilons,
                                  std::span<const std::uint64_t> seeds, SolveMode mode,
                                  unsigned threads, std::ostream* progress) {
  std::vector<BenchRow> rows;
  for (const int n : sizes) {
    for (const Rational& eps : epsilons) {
      for (const std::uint64_t seed : seeds) {
        GeneratorConfig config;
        config.n = n;
        config.seed = seed;
        config.weight_max = 50;
        config.coeff_max = 50;
        const Instance instance = random_instance(config);
        const SolutionSchedule schedule = solve_parametric(instance, eps, mode, threads);

        BenchRow row;
        row.n = n;
        row.eps = eps;
        row.seed = seed;
        row.mode = mode;
        row.phi_segments = schedule.stats.phi_segments;
        row.criticals = schedule.stats.critical_count;
        row.intervals = schedule.stats.interval_count;
        row.phi_ms = schedule.stats.phi_ms;
        row.subdivision_ms = schedule.stats.subdivision_ms;
        row.solve_ms = schedule.stats.solve_ms;
        row.total_ms = schedule.stats.total_ms;
        rows.push_back(row);

        if (progress) {
          *progress << "n=" << n << " eps=" << eps << " seed=" << seed << " intervals="
                    << row.intervals << " budget=" << row.interval_budget() << " time_ms="
                    << row.total_ms << '\n';
        }
      }
    }
  }
  return rows;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,epsilon,seed,mode,phi_segments,criticals,intervals,interval_budget,"
         "phi_ms,subdivision_ms,solve_ms,total_ms\n";
  for (const BenchRow& row : rows) {
    out << row.n << ',' << row.eps << ',' << row.seed << ',' << to_string(row.mode) << ','
        << row.phi_segments << ',' << row.criticals << ',' << row.intervals << ','
        << row.interval_budget() << ',' << row.phi_ms << ',' << row.subdivision_ms << ','
        << row.solve_ms << ',' << row.total_ms << '\n';
  }
}

}  // namespace parakp
