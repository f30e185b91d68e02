// Command-line front end: generate instances, solve them parametrically,
// verify schedules against the brute-force oracle, export plot data, and
// run the scaling benchmark sweep.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parakp/bench.hpp"
#include "parakp/generator.hpp"
#include "parakp/greedy_half.hpp"
#include "parakp/json_io.hpp"
#include "parakp/oracle.hpp"
#include "parakp/parametric.hpp"

namespace {

using namespace parakp;

Rational parse_epsilon(const std::string& text) {
  Rational eps(0);
  try {
    eps = Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError("epsilon", "expected an exact fraction like 1/4, got '" + text +
                                              "'");
  }
  if (!(Rational(0) < eps && eps < Rational(1))) {
    throw CLI::ValidationError("epsilon", "epsilon must lie strictly between 0 and 1");
  }
  return eps;
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(name, "expected an integer or fraction, got '" + text + "'");
  }
}

SolveMode parse_mode(const std::string& text) {
  if (text == "exact" || text == "exact_inner") return SolveMode::exact_inner;
  if (text == "fptas" || text == "fptas_inner") return SolveMode::fptas_inner;
  throw CLI::ValidationError("mode", "expected 'exact' or 'fptas', got '" + text + "'");
}

int run_generate(const GeneratorConfig& config, const std::string& out_path) {
  const Instance instance = random_instance(config);
  save_json(out_path, instance_to_json(instance));
  std::cout << "wrote " << out_path << " (n=" << instance.size()
            << ", capacity=" << instance.capacity << ")\n";
  return 0;
}

int run_solve(const std::string& instance_path, const std::string& eps_text,
              const std::string& mode_text, unsigned threads, const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  const Rational eps = parse_epsilon(eps_text);
  const SolveMode mode = parse_mode(mode_text);

  const SolutionSchedule schedule = solve_parametric(instance, eps, mode, threads);
  save_json(out_path, schedule_to_json(schedule));

  std::cout << "n=" << instance.size() << " epsilon=" << eps << " mode=" << to_string(mode)
            << " criticals=" << schedule.stats.critical_count
            << " intervals=" << schedule.stats.interval_count
            << " phi_segments=" << schedule.stats.phi_segments
            << " time_ms=" << schedule.stats.total_ms << '\n';
  std::cout << "wrote " << out_path << '\n';
  return 0;
}

int run_verify(const std::string& instance_path, const std::string& schedule_path,
               const std::string& eps_text) {
  const Instance instance = load_instance(instance_path);
  if (instance.size() > kMaxOracleItems) {
    std::cerr << "verify needs the brute-force oracle, which is limited to " << kMaxOracleItems
              << " items; instance has " << instance.size() << '\n';
    return 2;
  }
  SolutionSchedule schedule = schedule_from_json(load_json(schedule_path));
  const Rational eps = eps_text.empty() ? schedule.epsilon : parse_epsilon(eps_text);

  std::size_t mismatches = 0;
  try {
    mismatches = rebind_schedule(schedule, instance);
  } catch (const std::invalid_argument& error) {
    std::cerr << "schedule/instance mismatch: " << error.what() << '\n';
    return 2;
  }
  if (mismatches != 0) {
    std::cout << "warning: " << mismatches
              << " interval(s) store a profit line that disagrees with their item set;"
              << " verifying the item sets\n";
  }

  const CertifyReport report = certify(schedule, instance, eps);
  std::cout << "checked " << report.points_checked << " points and " << report.pieces_checked
            << " linear pieces against the exact optimum (epsilon=" << eps << ")\n";
  if (report.worst_ratio) {
    std::cout << "worst schedule/optimum ratio at checked points: " << *report.worst_ratio
              << " (~" << report.worst_ratio->to_decimal(6) << ")\n";
  }
  if (report.ok() && mismatches == 0) {
    std::cout << "OK: schedule is (1-" << eps << ")-optimal for every lambda\n";
    return 0;
  }
  if (!report.violations.empty()) {
    std::cout << "violations (lambda, schedule profit, optimum):\n";
    for (const CertifyViolation& v : report.violations) {
      std::cout << "  lambda=" << v.lambda << " schedule=" << v.schedule_profit
                << " optimum=" << v.optimum << '\n';
    }
  }
  return 1;
}

int run_export(const std::string& instance_path, const std::string& schedule_path,
               const std::string& min_text, const std::string& max_text, int samples,
               const std::string& out_path) {
  const Instance instance = load_instance(instance_path);
  SolutionSchedule schedule = schedule_from_json(load_json(schedule_path));
  rebind_schedule(schedule, instance);
  const Rational lo = parse_rational_flag("--lambda-min", min_text);
  const Rational hi = parse_rational_flag("--lambda-max", max_text);
  if (!(lo < hi)) throw CLI::ValidationError("--lambda-min", "need lambda-min < lambda-max");
  if (samples < 2) throw CLI::ValidationError("--samples", "need at least 2 samples");

  const HalfApproxFunction phi = compute_phi(instance);
  std::optional<ExactProfitFunction> oracle;
  if (instance.size() <= kMaxOracleItems) oracle = brute_force_parametric(instance);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 2;
  }
  out << "lambda,schedule_profit,phi,p_star\n";
  const Rational step = (hi - lo) / Rational(samples - 1);
  for (int k = 0; k < samples; ++k) {
    const Rational lambda = lo + Rational(k) * step;
    out << lambda.to_decimal() << ',' << query(schedule, lambda).profit.to_decimal() << ','
        << phi.phi.value(lambda).to_decimal() << ',';
    if (oracle) out << oracle->function.value(lambda).to_decimal();
    out << '\n';
  }
  std::cout << "wrote " << out_path << " (" << samples << " rows)\n";
  return 0;
}

int run_bench(const std::string& out_path, int seed_count, const std::string& mode_text,
              unsigned threads, std::vector<int> sizes) {
  if (seed_count < 1) throw CLI::ValidationError("--seeds", "need at least one seed");
  if (sizes.empty()) sizes = {10, 20, 50, 100};
  const std::vector<Rational> epsilons = {Rational(1, 2), Rational(1, 4), Rational(1, 10)};
  std::vector<std::uint64_t> seeds;
  for (int s = 0; s < seed_count; ++s) seeds.push_back(11 + static_cast<std::uint64_t>(s));

  const std::vector<BenchRow> rows =
      bench_sweep(sizes, epsilons, seeds, parse_mode(mode_text), threads, &std::cerr);

  std::ofstream out(out_path);
  if (!out) {
    std::cerr << "cannot open " << out_path << " for writing\n";
    return 2;
  }
  write_bench_csv(out, rows);
  std::cout << "wrote " << out_path << " (" << rows.size() << " rows)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parametric knapsack FPTAS: interval schedules of (1-eps)-optimal solutions"};
  app.require_subcommand(1);

  // generate
  auto* generate = app.add_subcommand("generate", "write a random instance file");
  GeneratorConfig config;
  std::string gen_out = "instance.json";
  long long fixed_capacity = -1;
  generate->add_option("--n", config.n, "number of items")->required();
  generate->add_option("--seed", config.seed, "random seed")->default_val(0);
  generate->add_option("--w-max", config.weight_max, "max item weight")->default_val(10);
  generate->add_option("--c-max", config.coeff_max, "max |a|, |b|")->default_val(10);
  generate->add_option("--capacity", fixed_capacity,
                       "fixed capacity (default: half the total weight)");
  generate->add_option("-o,--output", gen_out, "output path")->default_val("instance.json");

  // solve
  auto* solve = app.add_subcommand("solve", "compute a solution schedule");
  std::string solve_instance, solve_eps, solve_out = "schedule.json", solve_mode = "exact";
  unsigned solve_threads = 0;
  solve->add_option("--instance", solve_instance, "instance file")->required();
  solve->add_option("--epsilon", solve_eps, "precision as a fraction, e.g. 1/4")->required();
  solve->add_option("--mode", solve_mode, "inner solver: exact | fptas")->default_val("exact");
  solve->add_option("--threads", solve_threads, "worker threads (0 = auto)")->default_val(0);
  solve->add_option("-o,--output", solve_out, "output path")->default_val("schedule.json");

  // verify
  auto* verify = app.add_subcommand("verify", "check a schedule against the exact optimum");
  std::string verify_instance, verify_schedule, verify_eps;
  verify->add_option("--instance", verify_instance, "instance file")->required();
  verify->add_option("--schedule", verify_schedule, "schedule file")->required();
  verify->add_option("--epsilon", verify_eps, "override the schedule's epsilon");

  // export
  auto* exporter = app.add_subcommand("export", "sample profit curves into a CSV");
  std::string export_instance, export_schedule, export_min, export_max,
      export_out = "curves.csv";
  int export_samples = 101;
  exporter->add_option("--instance", export_instance, "instance file")->required();
  exporter->add_option("--schedule", export_schedule, "schedule file")->required();
  exporter->add_option("--lambda-min", export_min, "left end of the sampled range")->required();
  exporter->add_option("--lambda-max", export_max, "right end of the sampled range")->required();
  exporter->add_option("--samples", export_samples, "sample count")->default_val(101);
  exporter->add_option("-o,--output", export_out, "output path")->default_val("curves.csv");

  // bench
  auto* bench = app.add_subcommand("bench", "interval-count/time sweep over n and epsilon");
  std::string bench_out = "bench.csv", bench_mode = "exact";
  int bench_seeds = 3;
  unsigned bench_threads = 0;
  std::vector<int> bench_sizes;
  bench->add_option("-o,--output", bench_out, "output path")->default_val("bench.csv");
  bench->add_option("--seeds", bench_seeds, "seeds per grid point")->default_val(3);
  bench->add_option("--mode", bench_mode, "inner solver: exact | fptas")->default_val("exact");
  bench->add_option("--threads", bench_threads, "worker threads (0 = auto)")->default_val(0);
  bench->add_option("--sizes", bench_sizes, "item counts (default 10 20 50 100)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) {
      if (fixed_capacity >= 0) config.fixed_capacity = fixed_capacity;
      return run_generate(config, gen_out);
    }
    if (solve->parsed()) {
      return run_solve(solve_instance, solve_eps, solve_mode, solve_threads, solve_out);
    }
    if (verify->parsed()) return run_verify(verify_instance, verify_schedule, verify_eps);
    if (exporter->parsed()) {
      return run_export(export_instance, export_schedule, export_min, export_max,
                        export_samples, export_out);
    }
    if (bench->parsed()) {
      return run_bench(bench_out, bench_seeds, bench_mode, bench_threads, bench_sizes);
    }
  } catch (const CLI::ValidationError& error) {
    std::cerr << error.what() << '\n';
    return 2;
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << '\n';
    return 2;
  }
  return 0;
}
