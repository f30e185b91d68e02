#ifndef PARAKP_PARAMETRIC_HPP
#define PARAKP_PARAMETRIC_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "parakp/model.hpp"

namespace parakp {

/// Which solver handles the per-interval scaled subproblems. exact_inner
/// runs the full DP with the requested eps; fptas_inner halves eps and
/// uses the scaling FPTAS for both the subdivision and the inner solves,
/// so the two (1 - eps/2) losses compose back to (1 - eps).
enum class SolveMode { exact_inner, fptas_inner };

const char* to_string(SolveMode mode);

struct ScheduleEntry {
  Interval interval;
  KnapsackSolution solution;
};

struct SolveStats {
  std::size_t phi_segments = 0;
  std::size_t critical_count = 0;
  std::size_t interval_count = 0;
  double phi_ms = 0;
  double subdivision_ms = 0;
  double solve_ms = 0;
  double total_ms = 0;
};

/// The FPTAS output: an alternating open/single-point partition of the
/// real line with one feasible solution per interval, each guaranteed
/// (1 - epsilon)-optimal throughout its interval.
struct SolutionSchedule {
  Rational epsilon;
  SolveMode mode = SolveMode::exact_inner;
  std::vector<Rational> criticals;     // shared boundaries, sorted
  std::vector<ScheduleEntry> entries;  // size 2 * criticals.size() + 1
  SolveStats stats;

  /// Index of the unique interval containing x.
  std::size_t locate(const Rational& x) const;
};

/// End-to-end pipeline: phi, critical values, alternating intervals, one
/// scaled subproblem per interval (the all-zero solution where phi = 0).
/// threads = 0 picks the hardware concurrency.
SolutionSchedule solve_parametric(const Instance& instance, const Rational& eps,
                                  SolveMode mode = SolveMode::exact_inner,
                                  unsigned threads = 0);

struct QueryResult {
  std::size_t index = 0;
  const ScheduleEntry* entry = nullptr;
  Rational profit;
};

/// Point lookup: the interval containing x, its solution, and the exact
/// profit there.
QueryResult query(const SolutionSchedule& schedule, const Rational& x);

struct CertifyViolation {
  Rational lambda;
  Rational schedule_profit;
  Rational optimum;
};

struct CertifyReport {
  std::vector<CertifyViolation> violations;
  std::optional<Rational> worst_ratio;  // min schedule/p* over points with p* > 0
  std::size_t points_checked = 0;
  std::size_t pieces_checked = 0;

  bool ok() const { return violations.empty(); }
};

/// Proves or refutes schedule(x) >= (1 - eps) p*(x) for every real x
/// against the brute-force oracle. Checks every breakpoint of both
/// functions, every interval representative, and the linear pieces in
/// between (including ray behavior at both infinities), all in exact
/// arithmetic. Refuses instances beyond the oracle limit.
CertifyReport certify(const SolutionSchedule& schedule, const Instance& instance,
                      const Rational& eps);

}  // namespace parakp

#endif  // PARAKP_PARAMETRIC_HPP
