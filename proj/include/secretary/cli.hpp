#pragma once

// Sweep orchestration and CSV emission behind the secretary-lab commands.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "secretary/harness.hpp"

namespace secretary::cli {

enum ExitCode : int { kOk = 0, kAssertionFailure = 1, kUsageError = 2 };

struct SweepConfig {
  std::vector<Family> families;
  std::vector<double> eps_grid;
  std::size_t n = 100;
  std::size_t k = 1;
  std::size_t trials = 10000;
  std::vector<Algorithm> algorithms;
  std::uint64_t master_seed = 0;
  std::string output_path;  // empty: write to the csv stream handed to the command
  unsigned workers = 0;

  /// Throws InvalidInput naming the offending field.
  void validate() const;
};

/// {0, 1/20, ..., 19/20}
std::vector<double> default_eps_grid();

/// Algorithms plotted in the benchmark figure.
std::vector<Algorithm> fig1_algorithms();
/// The four synthetic instance families.
std::vector<Family> fig1_families();

struct SweepRow {
  FamilySpec family;
  AlgorithmSpec algorithm;
  std::uint64_t seed = 0;
  TrialStats stats;
};

/// One TrialStats per (family, eps, algorithm), in that nesting order.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

/// Fixed-point with 6 decimals, '.' separator, locale independent.
std::string format_real(double value);

/// `family,eps,algorithm,n,k,trials,seed,competitive_ratio,fairness,...`;
/// with per_rank_k > 0 the fairness column expands to fairness_1..fairness_k.
std::string csv_header(std::size_t per_rank_k = 0);
std::string csv_row(const SweepRow& row, bool per_rank = false);

/// Writes header plus rows; returns the number of rows carrying smoothness violations.
std::size_t write_csv(std::ostream& out, const std::vector<SweepRow>& rows, std::size_t per_rank_k);

/// `run`: single-choice sweep (k must be 1).
int cmd_run(const SweepConfig& config, std::ostream& csv, std::ostream& log);

/// `k-experiment`: multi-select sweep with per-rank fairness columns.
int cmd_k_experiment(const SweepConfig& config, std::ostream& csv, std::ostream& log);

struct Fig1Options {
  std::uint64_t master_seed = 0;
  std::filesystem::path output_dir = ".";
  std::size_t n = 100;
  std::size_t trials = 10000;
  unsigned workers = 0;
};

/// `reproduce-fig1`: 4 families × 20 eps × 5 algorithms, one CSV per family
/// named fig1_<family>.csv.
int cmd_reproduce_fig1(const Fig1Options& options, std::ostream& log);

struct CounterexampleOptions {
  double theta_prime = 0.5;
  std::vector<double> value_max_eps{0.01, 0.05, 0.1};
  std::size_t n = 100;
  std::size_t trials = 10000;
  std::uint64_t master_seed = 0;
};

/// `counterexamples`: both baseline counterexamples as a pass/fail table.
int cmd_counterexamples(const CounterexampleOptions& options, std::ostream& out);

struct OracleCheckOptions {
  std::size_t instances = 20;
  std::size_t n = 4;
  std::size_t k = 2;  // for the multi-select algorithms
  std::size_t trials = 100000;
  double tolerance = 0.01;
  std::vector<Algorithm> algorithms;  // empty: every registered algorithm
  std::uint64_t master_seed = 0;
};

/// `oracle-check`: Monte Carlo against the exact oracle on random small instances.
int cmd_oracle_check(const OracleCheckOptions& options, std::ostream& out);

}  // namespace secretary::cli
