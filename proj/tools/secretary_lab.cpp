// secretary-lab: run secretary-with-predictions experiments from the command line.

#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "secretary/cli.hpp"

namespace {

using namespace secretary;

struct SweepFlags {
  std::vector<std::string> families;
  std::vector<double> eps;
  std::string eps_grid;
  std::size_t n = 100;
  std::size_t k = 1;
  std::size_t trials = 10000;
  std::vector<std::string> algorithms;
  std::uint64_t seed = 0;
  std::string out;
};

void add_sweep_flags(CLI::App& cmd, SweepFlags& flags, bool require_algo) {
  cmd.add_option("--family", flags.families, "instance family (repeatable)")->required();
  cmd.add_option("--eps", flags.eps, "error level (repeatable)");
  cmd.add_option("--eps-grid", flags.eps_grid,
                 "comma-separated eps list, or 'default' for 0, 1/20, ..., 19/20");
  cmd.add_option("--n", flags.n, "candidates per instance")->capture_default_str();
  cmd.add_option("--k", flags.k, "selection size")->capture_default_str();
  cmd.add_option("--trials", flags.trials, "trials per cell")->capture_default_str();
  cmd.add_option("--seed", flags.seed, "master seed")->capture_default_str();
  auto* algo = cmd.add_option("--algo", flags.algorithms, "algorithm name (repeatable)");
  if (require_algo) algo->required();
  cmd.add_option("--out", flags.out, "CSV output path (default stdout)");
}

std::vector<double> parse_grid(const std::string& text) {
  if (text == "default") return cli::default_eps_grid();
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) throw InvalidInput("bad eps value '" + item + "'");
    grid.push_back(v);
  }
  return grid;
}

cli::SweepConfig to_config(const SweepFlags& flags) {
  cli::SweepConfig config;
  for (const auto& name : flags.families) {
    const auto family = parse_family(name);
    if (!family) throw InvalidInput("unknown family '" + name + "'");
    config.families.push_back(*family);
  }
  for (const auto& name : flags.algorithms) {
    const auto algorithm = parse_algorithm(name);
    if (!algorithm) throw InvalidInput("unknown algorithm '" + name + "'");
    config.algorithms.push_back(*algorithm);
  }
  config.eps_grid = flags.eps;
  if (!flags.eps_grid.empty()) {
    try {
      const auto grid = parse_grid(flags.eps_grid);
      config.eps_grid.insert(config.eps_grid.end(), grid.begin(), grid.end());
    } catch (const std::logic_error&) {
      throw InvalidInput("cannot parse --eps-grid '" + flags.eps_grid + "'");
    }
  }
  if (config.eps_grid.empty()) config.eps_grid = cli::default_eps_grid();
  config.n = flags.n;
  config.k = flags.k;
  config.trials = flags.trials;
  config.master_seed = flags.seed;
  config.output_path = flags.out;
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secretary problem with predictions: simulation laboratory"};
  app.require_subcommand(1);

  SweepFlags run_flags;
  auto* run = app.add_subcommand("run", "single-choice sweep, one CSV row per (family, eps, algorithm)");
  add_sweep_flags(*run, run_flags, true);

  SweepFlags k_flags;
  k_flags.algorithms = {"k-pegging", "fair-half"};
  auto* k_experiment =
      app.add_subcommand("k-experiment", "multi-choice sweep with per-rank fairness columns");
  add_sweep_flags(*k_experiment, k_flags, false);

  cli::Fig1Options fig1;
  std::string fig1_dir = ".";
  auto* reproduce = app.add_subcommand("reproduce-fig1", "full benchmark sweep, one CSV per family");
  reproduce->add_option("--seed", fig1.master_seed, "master seed")->capture_default_str();
  reproduce->add_option("--out", fig1_dir, "output directory")->capture_default_str();
  reproduce->add_option("--trials", fig1.trials, "trials per cell")->capture_default_str();
  reproduce->add_option("--n", fig1.n, "candidates per instance")->capture_default_str();

  cli::CounterexampleOptions counter;
  std::vector<double> counter_eps;
  auto* counterexamples =
      app.add_subcommand("counterexamples", "baseline counterexamples as a pass/fail table");
  counterexamples->add_option("--theta", counter.theta_prime, "theta' for the learned-dynkin instance")
      ->capture_default_str();
  counterexamples->add_option("--eps", counter_eps, "value-max eps levels (repeatable)");
  counterexamples->add_option("--n", counter.n, "value-max instance size")->capture_default_str();
  counterexamples->add_option("--trials", counter.trials, "trials per check")->capture_default_str();
  counterexamples->add_option("--seed", counter.master_seed, "master seed")->capture_default_str();

  cli::OracleCheckOptions oracle;
  std::vector<std::string> oracle_algos;
  auto* oracle_check =
      app.add_subcommand("oracle-check", "Monte Carlo vs exact oracle on random small instances");
  oracle_check->add_option("--instances", oracle.instances, "random instances")->capture_default_str();
  oracle_check->add_option("--n", oracle.n, "candidates per instance")->capture_default_str();
  oracle_check->add_option("--k", oracle.k, "k for multi-select algorithms")->capture_default_str();
  oracle_check->add_option("--trials", oracle.trials, "Monte Carlo trials")->capture_default_str();
  oracle_check->add_option("--tol", oracle.tolerance, "per-candidate tolerance")->capture_default_str();
  oracle_check->add_option("--algo", oracle_algos, "algorithm name (repeatable)");
  oracle_check->add_option("--seed", oracle.master_seed, "master seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kUsageError;
  }

  try {
    if (*run) return cli::cmd_run(to_config(run_flags), std::cout, std::cerr);
    if (*k_experiment) return cli::cmd_k_experiment(to_config(k_flags), std::cout, std::cerr);
    if (*reproduce) {
      fig1.output_dir = fig1_dir;
      return cli::cmd_reproduce_fig1(fig1, std::cerr);
    }
    if (*counterexamples) {
      if (!counter_eps.empty()) counter.value_max_eps = counter_eps;
      return cli::cmd_counterexamples(counter, std::cout);
    }
    if (*oracle_check) {
      for (const auto& name : oracle_algos) {
        const auto algorithm = parse_algorithm(name);
        if (!algorithm) throw InvalidInput("unknown algorithm '" + name + "'");
        oracle.algorithms.push_back(*algorithm);
      }
      return cli::cmd_oracle_check(oracle, std::cout);
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
