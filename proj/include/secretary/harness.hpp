#pragma once

// Monte Carlo trial runner, metrics, and per-trial guarantee checks.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "secretary/core.hpp"
#include "secretary/generators.hpp"
#include "secretary/multi_select.hpp"
#include "secretary/single_select.hpp"

namespace secretary {

enum class Algorithm {
  AdditivePegging,
  MultiplicativePegging,
  PeggingSymmetric,
  Dynkin,
  LearnedDynkin,
  HighestPrediction,
  ValueMax,
  KPegging,
  FairHalf,
};

/// Registry names, in registry order.
std::span<const Algorithm> all_algorithms();
std::string_view to_string(Algorithm algorithm);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// True for algorithms that select a set (k ≥ 1) rather than one candidate.
bool is_multi_select(Algorithm algorithm);
/// True for algorithms that carry a probability-1 value guarantee.
bool has_smoothness_guarantee(Algorithm algorithm);

struct AlgorithmSpec {
  Algorithm algorithm = Algorithm::AdditivePegging;
  std::size_t k = 1;  // only read by multi-select algorithms
  double dynkin_cutoff = kDynkinCutoff;
  ValueMaxParams value_max{};

  /// Selection size the metrics are computed against.
  std::size_t capacity() const { return is_multi_select(algorithm) ? k : 1; }
};

using Outcome = std::variant<SelectionOutcome, SetSelection>;

Outcome run_algorithm(const AlgorithmSpec& spec, const Instance& instance,
                      const Schedule& schedule);

/// Accepted candidates of either outcome kind.
std::vector<Index> accepted_indices(const Outcome& outcome);

/// Per-trial value guarantee for the algorithm that produced `outcome`:
///  additive Pegging          u_A ≥ u_i* − 4ε
///  multiplicative Pegging    u_A ≥ u_i* (1 − ε)² / (1 + ε)²
///  k-Pegging                 Σ_S u ≥ top-k sum − 4kε
/// each with 1e-9 relative slack. Baselines always pass.
bool check_smoothness(const Outcome& outcome, const Instance& instance, const AlgorithmSpec& spec);

/// The lower bound check_smoothness compares against (−∞ for baselines).
double smoothness_bound(const Instance& instance, const AlgorithmSpec& spec);

struct TrialStats {
  std::size_t trials = 0;
  double competitive_ratio = 0.0;
  std::vector<double> fairness;  // size 1 for k = 1, else F̂_1..F̂_k
  double fill_rate = 0.0;
  std::size_t smoothness_violations = 0;
  std::size_t no_accept_count = 0;
  double mean_value = 0.0;  // mean accepted (total) true value
  double value_stddev = 0.0;
  std::optional<std::size_t> first_violation_trial;
};

struct RunOptions {
  /// 0 picks std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Deterministic per-trial seed from (master, family, eps, trial).
std::uint64_t trial_seed(std::uint64_t master_seed, Family family, double eps, std::uint64_t trial);

/// Runs every algorithm on the same `trials` seeded (instance, schedule)
/// pairs. Results do not depend on the worker count.
std::vector<TrialStats> run_trials(std::span<const AlgorithmSpec> algorithms,
                                   const FamilySpec& family, std::size_t trials,
                                   std::uint64_t master_seed, const RunOptions& options = {});

TrialStats run_trials(const AlgorithmSpec& algorithm, const FamilySpec& family, std::size_t trials,
                      std::uint64_t master_seed, const RunOptions& options = {});

}  // namespace secretary
