#include "secretary/cli.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "secretary/oracle.hpp"

namespace secretary::cli {

namespace {

AlgorithmSpec spec_for(Algorithm algorithm, std::size_t k) {
  AlgorithmSpec spec;
  spec.algorithm = algorithm;
  spec.k = is_multi_select(algorithm) ? k : 1;
  return spec;
}

std::string join_row(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t c = 0; c < cells.size(); ++c) {
    if (c) line += ',';
    line += cells[c];
  }
  return line;
}

void report_violations(const std::vector<SweepRow>& rows, std::ostream& log) {
  for (const auto& row : rows) {
    if (row.stats.smoothness_violations == 0) continue;
    log << "smoothness violation: family=" << to_string(row.family.family)
        << " eps=" << format_real(row.family.epsilon)
        << " algorithm=" << to_string(row.algorithm.algorithm)
        << " violations=" << row.stats.smoothness_violations
        << " first_trial=" << row.stats.first_violation_trial.value_or(0) << '\n';
  }
}

int sweep_command(const SweepConfig& config, std::size_t per_rank_k, std::ostream& csv,
                  std::ostream& log) {
  std::vector<SweepRow> rows;
  try {
    config.validate();
    rows = run_sweep(config);
  } catch (const InvalidInput& e) {
    log << "error: " << e.what() << '\n';
    return kUsageError;
  }
  std::size_t violations;
  if (config.output_path.empty()) {
    violations = write_csv(csv, rows, per_rank_k);
  } else {
    std::ofstream file(config.output_path);
    if (!file) {
      log << "error: cannot open " << config.output_path << " for writing\n";
      return kAssertionFailure;
    }
    violations = write_csv(file, rows, per_rank_k);
  }
  report_violations(rows, log);
  return violations ? kAssertionFailure : kOk;
}

}  // namespace

void SweepConfig::validate() const {
  if (families.empty()) throw InvalidInput("at least one --family is required");
  if (algorithms.empty()) throw InvalidInput("at least one --algo is required");
  if (eps_grid.empty()) throw InvalidInput("eps grid is empty");
  for (const double eps : eps_grid) {
    if (!(eps >= 0.0 && eps < 1.0)) {
      throw InvalidInput("eps " + format_real(eps) + " outside [0, 1)");
    }
  }
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (k < 1 || k > n) {
    throw InvalidInput("k must lie in [1, n], got k=" + std::to_string(k));
  }
  for (const Family family : families) {
    for (const double eps : eps_grid) FamilySpec{family, eps, n}.validate();
  }
}

std::vector<double> default_eps_grid() {
  std::vector<double> grid;
  for (int step = 0; step < 20; ++step) grid.push_back(step / 20.0);
  return grid;
}

std::vector<Algorithm> fig1_algorithms() {
  return {Algorithm::AdditivePegging, Algorithm::MultiplicativePegging, Algorithm::LearnedDynkin,
          Algorithm::HighestPrediction, Algorithm::Dynkin};
}

std::vector<Family> fig1_families() {
  return {Family::AlmostConstant, Family::Uniform, Family::Adversarial, Family::Unfair};
}

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  config.validate();
  std::vector<AlgorithmSpec> specs;
  for (const Algorithm a : config.algorithms) specs.push_back(spec_for(a, config.k));

  std::vector<SweepRow> rows;
  for (const Family family : config.families) {
    for (const double eps : config.eps_grid) {
      const FamilySpec fam{family, eps, config.n};
      const auto stats =
          run_trials(specs, fam, config.trials, config.master_seed, RunOptions{config.workers});
      for (std::size_t a = 0; a < specs.size(); ++a) {
        rows.push_back({fam, specs[a], config.master_seed, stats[a]});
      }
    }
  }
  return rows;
}

std::string format_real(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::fixed, 6);
  return std::string(buf, res.ptr);
}

std::string csv_header(std::size_t per_rank_k) {
  std::vector<std::string> cells{"family", "eps",  "algorithm", "n", "k",
                                 "trials", "seed", "competitive_ratio"};
  if (per_rank_k == 0) {
    cells.push_back("fairness");
  } else {
    for (std::size_t r = 1; r <= per_rank_k; ++r) cells.push_back("fairness_" + std::to_string(r));
  }
  cells.insert(cells.end(), {"fill_rate", "smoothness_violations", "no_accept_count"});
  return join_row(cells);
}

std::string csv_row(const SweepRow& row, bool per_rank) {
  const TrialStats& s = row.stats;
  std::vector<std::string> cells{std::string(to_string(row.family.family)),
                                 format_real(row.family.epsilon),
                                 std::string(to_string(row.algorithm.algorithm)),
                                 std::to_string(row.family.n),
                                 std::to_string(row.algorithm.capacity()),
                                 std::to_string(s.trials),
                                 std::to_string(row.seed),
                                 format_real(s.competitive_ratio)};
  if (per_rank) {
    for (const double f : s.fairness) cells.push_back(format_real(f));
  } else {
    cells.push_back(format_real(s.fairness.front()));
  }
  cells.push_back(format_real(s.fill_rate));
  cells.push_back(std::to_string(s.smoothness_violations));
  cells.push_back(std::to_string(s.no_accept_count));
  return join_row(cells);
}

std::size_t write_csv(std::ostream& out, const std::vector<SweepRow>& rows,
                      std::size_t per_rank_k) {
  out << csv_header(per_rank_k) << '\n';
  std::size_t violating = 0;
  for (const auto& row : rows) {
    out << csv_row(row, per_rank_k > 0) << '\n';
    if (row.stats.smoothness_violations) ++violating;
  }
  return violating;
}

int cmd_run(const SweepConfig& config, std::ostream& csv, std::ostream& log) {
  if (config.k != 1) {
    log << "error: run selects a single candidate; use k-experiment for k > 1\n";
    return kUsageError;
  }
  return sweep_command(config, 0, csv, log);
}

int cmd_k_experiment(const SweepConfig& config, std::ostream& csv, std::ostream& log) {
  for (const Algorithm a : config.algorithms) {
    if (!is_multi_select(a)) {
      log << "error: k-experiment runs multi-select algorithms only, got " << to_string(a)
          << '\n';
      return kUsageError;
    }
  }
  return sweep_command(config, config.k, csv, log);
}

int cmd_reproduce_fig1(const Fig1Options& options, std::ostream& log) {
  std::error_code ec;
  std::filesystem::create_directories(options.output_dir, ec);
  if (ec) {
    log << "error: cannot create " << options.output_dir << ": " << ec.message() << '\n';
    return kAssertionFailure;
  }
  int status = kOk;
  for (const Family family : fig1_families()) {
    SweepConfig config;
    config.families = {family};
    config.eps_grid = default_eps_grid();
    config.n = options.n;
    config.trials = options.trials;
    config.algorithms = fig1_algorithms();
    config.master_seed = options.master_seed;
    config.workers = options.workers;
    const auto path =
        options.output_dir / ("fig1_" + std::string(to_string(family)) + ".csv");
    std::ofstream file(path);
    if (!file) {
      log << "error: cannot open " << path << " for writing\n";
      return kAssertionFailure;
    }
    const auto rows = run_sweep(config);
    if (write_csv(file, rows, 0)) status = kAssertionFailure;
    report_violations(rows, log);
    log << "wrote " << path.string() << '\n';
  }
  return status;
}

int cmd_counterexamples(const CounterexampleOptions& options, std::ostream& out) {
  std::optional<Instance> ld_instance;
  try {
    ld_instance = counterexample_learned_dynkin(options.theta_prime);
    for (const double eps : options.value_max_eps) {
      FamilySpec{Family::ValueMaxCounter, eps, options.n}.validate();
    }
    if (options.trials < 1) throw InvalidInput("trials must be at least 1");
  } catch (const InvalidInput& e) {
    out << "error: " << e.what() << '\n';
    return kUsageError;
  }

  bool all_pass = true;
  const auto line = [&](const std::string& check, const std::string& param,
                        const std::string& measured, const std::string& bound, bool pass) {
    out << check << " | " << param << " | " << measured << " | " << bound << " | "
        << (pass ? "PASS" : "FAIL") << '\n';
    all_pass = all_pass && pass;
  };
  out << "check | parameter | measured | bound | result\n";

  {
    const AlgorithmSpec spec{Algorithm::LearnedDynkin};
    const FamilySpec fam{Family::LearnedDynkinCounter, options.theta_prime, 2};
    const TrialStats stats = run_trials(spec, fam, options.trials, options.master_seed);
    line("learned-dynkin fairness", "theta'=" + format_real(options.theta_prime),
         format_real(stats.fairness.front()), "== 0", stats.fairness.front() == 0.0);
    const ExactStats exact = exact_oracle(spec, *ld_instance);
    const bool exact_ok = exact.acceptance_probability[0] == 0.0 &&
                          std::abs(exact.acceptance_probability[1] - 1.0) <= 1e-12;
    line("learned-dynkin exact P[accept]", "theta'=" + format_real(options.theta_prime),
         "(" + format_real(exact.acceptance_probability[0]) + ", " +
             format_real(exact.acceptance_probability[1]) + ")",
         "(0, 1)", exact_ok);
  }

  {
    AlgorithmSpec spec{Algorithm::ValueMax};
    const double t_star = value_max_phases(spec.value_max).t_star;
    for (const double eps : options.value_max_eps) {
      const FamilySpec fam{Family::ValueMaxCounter, eps, options.n};
      const TrialStats stats = run_trials(spec, fam, options.trials, options.master_seed);
      const double slack = 3.0 * stats.value_stddev / std::sqrt(static_cast<double>(stats.trials));
      const double bound = (1.0 - t_star) + t_star * eps + slack;
      line("value-max E[u_A]", "eps=" + format_real(eps) + " c=1 lambda=0",
           format_real(stats.mean_value), "<= " + format_real(bound),
           stats.mean_value <= bound);
    }
  }
  return all_pass ? kOk : kAssertionFailure;
}

int cmd_oracle_check(const OracleCheckOptions& options, std::ostream& out) {
  std::vector<Algorithm> algorithms = options.algorithms;
  if (algorithms.empty()) algorithms.assign(all_algorithms().begin(), all_algorithms().end());
  if (options.n < 1 || options.n > kOracleMaxCandidates) {
    out << "error: oracle-check needs 1 <= n <= " << kOracleMaxCandidates << '\n';
    return kUsageError;
  }
  if (options.k < 1 || options.k > options.n) {
    out << "error: k must lie in [1, n]\n";
    return kUsageError;
  }
  if (options.trials < 1) {
    out << "error: trials must be at least 1\n";
    return kUsageError;
  }

  bool all_pass = true;
  Rng instance_rng(options.master_seed);
  for (std::size_t inst = 0; inst < options.instances; ++inst) {
    const Instance instance = gen_uniform(0.5, options.n, instance_rng);
    for (std::size_t a = 0; a < algorithms.size(); ++a) {
      const AlgorithmSpec spec = spec_for(algorithms[a], options.k);
      const auto seed = trial_seed(options.master_seed, Family::Uniform, 0.5, inst * 64 + a);
      const auto cmp =
          compare_oracle_montecarlo(spec, instance, options.trials, options.tolerance, seed);
      out << "instance " << inst + 1 << " " << to_string(spec.algorithm)
          << ": max deviation " << format_real(cmp.max_deviation) << " "
          << (cmp.passed ? "PASS" : "FAIL") << '\n';
      if (!cmp.passed) out << cmp.report();
      all_pass = all_pass && cmp.passed;
    }
  }
  return all_pass ? kOk : kAssertionFailure;
}

}  // namespace secretary::cli
