#include <doctest.h>

#include <random>

#include "parakp/oracle.hpp"
#include "parakp/parametric.hpp"
#include "../support/test_support.hpp"

using namespace parakp;

TEST_CASE("one constant item yields a single all-line interval") {
  const Instance inst{1, {Item{1, 2, 0}}};
  const SolutionSchedule schedule = solve_parametric(inst, Rational(1, 2));
  REQUIRE(schedule.entries.size() == 1);
  CHECK(schedule.entries[0].interval.kind() == Interval::Kind::whole_line);
  CHECK(schedule.entries[0].solution.selected == std::vector<int>{0});
  CHECK(schedule.entries[0].solution.profit_line == AffineFunction(Rational(2), Rational(0)));
  CHECK(certify(schedule, inst, Rational(1, 2)).ok());
}

TEST_CASE("two-item example is certified in both modes") {
  const Instance inst{1, {Item{1, 2, 0}, Item{1, 1, 1}}};
  for (const SolveMode mode : {SolveMode::exact_inner, SolveMode::fptas_inner}) {
    const SolutionSchedule schedule = solve_parametric(inst, Rational(1, 4), mode);
    const CertifyReport report = certify(schedule, inst, Rational(1, 4));
    CHECK(report.ok());
    // both solutions tie with profit 2 at the crossover
    CHECK(query(schedule, Rational(1)).profit == Rational(2));
  }
}

TEST_CASE("all-negative instances collapse to the empty solution") {
  const Instance inst{4, {Item{1, -3, 0}, Item{2, -1, 0}}};
  const SolutionSchedule schedule = solve_parametric(inst, Rational(1, 3));
  REQUIRE(schedule.entries.size() == 1);
  CHECK(schedule.entries[0].solution.selected.empty());
  CHECK(certify(schedule, inst, Rational(1, 3)).ok());
}

TEST_CASE("queries resolve single points and open intervals") {
  const Instance inst{1, {Item{1, 2, 0}, Item{1, 1, 1}}};
  const SolutionSchedule schedule = solve_parametric(inst, Rational(1, 4));
  REQUIRE(!schedule.criticals.empty());

  const Rational at = schedule.criticals.front();
  const QueryResult exact_hit = query(schedule, at);
  CHECK(exact_hit.entry->interval.kind() == Interval::Kind::single_point);
  CHECK(exact_hit.entry->interval.contains(at));

  const QueryResult far_left = query(schedule, at - Rational(1000000));
  CHECK(far_left.entry->interval.kind() == Interval::Kind::unbounded_left);

  if (schedule.criticals.size() >= 2) {
    const Rational mid = (schedule.criticals[0] + schedule.criticals[1]) / Rational(2);
    CHECK(query(schedule, mid).entry->interval.kind() == Interval::Kind::open);
  }

  // profit equals the stored line, everywhere
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Rational x = test::random_rational(rng, 30, 7);
    const QueryResult result = query(schedule, x);
    CHECK(result.profit == result.entry->solution.profit_line.value(x));
  }
}

TEST_CASE("certify flags a schedule that claims too little") {
  const Instance inst{1, {Item{1, 2, 0}, Item{1, 1, 1}}};
  SolutionSchedule empty_everywhere;
  empty_everywhere.epsilon = Rational(1, 2);
  empty_everywhere.entries.push_back(
      ScheduleEntry{Interval::whole_line(), KnapsackSolution::empty()});
  const CertifyReport report = certify(empty_everywhere, inst, Rational(1, 2));
  CHECK_FALSE(report.ok());
  CHECK(!report.violations.empty());
  // the oracle profit at the reported witness is indeed positive
  CHECK(report.violations.front().optimum.sign() > 0);
}

TEST_CASE("certify flags infeasible stored solutions") {
  const Instance inst{1, {Item{1, 2, 0}, Item{1, 1, 1}}};
  SolutionSchedule schedule = solve_parametric(inst, Rational(1, 2));
  // claim both items in some interval: exceeds the capacity
  schedule.entries.back().solution = KnapsackSolution::from_selection(inst, {0, 1});
  CHECK_FALSE(certify(schedule, inst, Rational(1, 2)).ok());
}

TEST_CASE("random instances are certified in both modes at several epsilons") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const Instance inst = test::corpus_instance(seed, 10);
    for (const Rational eps : {Rational(1, 2), Rational(1, 4)}) {
      for (const SolveMode mode : {SolveMode::exact_inner, SolveMode::fptas_inner}) {
        const SolutionSchedule schedule = solve_parametric(inst, eps, mode);
        const CertifyReport report = certify(schedule, inst, eps);
        CHECK(report.ok());
        if (report.worst_ratio) {
          CHECK(*report.worst_ratio >= Rational(1) - eps);
        }
      }
    }
  }
}

TEST_CASE("threaded and sequential solves agree") {
  const Instance inst = test::corpus_instance(77, 10);
  const SolutionSchedule sequential = solve_parametric(inst, Rational(1, 4),
                                                       SolveMode::exact_inner, 1);
  const SolutionSchedule threaded = solve_parametric(inst, Rational(1, 4),
                                                     SolveMode::exact_inner, 4);
  REQUIRE(sequential.entries.size() == threaded.entries.size());
  CHECK(sequential.criticals == threaded.criticals);
  for (std::size_t i = 0; i < sequential.entries.size(); ++i) {
    CHECK(sequential.entries[i].solution.selected == threaded.entries[i].solution.selected);
  }
}

TEST_CASE("epsilon bounds are enforced") {
  const Instance inst{1, {Item{1, 1, 0}}};
  CHECK_THROWS_AS(solve_parametric(inst, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(solve_parametric(inst, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(solve_parametric(inst, Rational(-1, 2)), std::invalid_argument);
}
