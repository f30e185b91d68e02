#ifndef PARAKP_BENCH_HPP
#define PARAKP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "parakp/parametric.hpp"

namespace parakp {

struct BenchRow {
  int n = 0;
  Rational eps;
  std::uint64_t seed = 0;
  SolveMode mode = SolveMode::exact_inner;
  std::size_t phi_segments = 0;
  std::size_t criticals = 0;
  std::size_t intervals = 0;
  double phi_ms = 0;
  double subdivision_ms = 0;
  double solve_ms = 0;
  double total_ms = 0;

  /// The interval budget 16 n^2 / eps the sweep is judged against.
  Integer interval_budget() const;
};

/// Solves one seeded random instance (weights and |coefficients| up to 50,
/// half-total-weight capacity) per grid point and records counts and wall
/// times. progress, when given, gets one line per grid point.
std::vector<BenchRow> bench_sweep(std::span<const int> sizes, std::span<const Rational> epsilons,
                                  std::span<const std::uint64_t> seeds, SolveMode mode,
                                  unsigned threads = 0, std::ostream* progress = nullptr);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace parakp

#endif  // PARAKP_BENCH_HPP
