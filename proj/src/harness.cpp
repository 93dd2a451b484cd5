#include "secretary/harness.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <thread>

namespace secretary {

namespace {

constexpr std::array<std::pair<Algorithm, std::string_view>, 9> kRegistry{{
    {Algorithm::AdditivePegging, "additive-pegging"},
    {Algorithm::MultiplicativePegging, "multiplicative-pegging"},
    {Algorithm::PeggingSymmetric, "pegging-symmetric"},
    {Algorithm::Dynkin, "dynkin"},
    {Algorithm::LearnedDynkin, "learned-dynkin"},
    {Algorithm::HighestPrediction, "highest-prediction"},
    {Algorithm::ValueMax, "value-max"},
    {Algorithm::KPegging, "k-pegging"},
    {Algorithm::FairHalf, "fair-half"},
}};

constexpr std::array<Algorithm, 9> kAllAlgorithms{
    Algorithm::AdditivePegging, Algorithm::MultiplicativePegging, Algorithm::PeggingSymmetric,
    Algorithm::Dynkin,          Algorithm::LearnedDynkin,         Algorithm::HighestPrediction,
    Algorithm::ValueMax,        Algorithm::KPegging,              Algorithm::FairHalf,
};

constexpr double kSmoothnessSlack = 1e-9;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// (1 − ε)² / (1 + ε)², clamped at zero once ε ≥ 1.
double ratio_factor(double eps) {
  const double down = std::max(0.0, 1.0 - eps);
  return (down * down) / ((1.0 + eps) * (1.0 + eps));
}

// Everything a trial contributes to the aggregate metrics.
struct TrialRecord {
  double ratio = 0.0;
  double value = 0.0;
  double fill = 0.0;
  bool violation = false;
  bool no_accept = false;
  std::vector<char> hits;  // per rank
};

TrialRecord record_trial(const AlgorithmSpec& spec, const Instance& instance,
                         const Schedule& schedule) {
  const Outcome outcome = run_algorithm(spec, instance, schedule);
  const auto accepted = accepted_indices(outcome);
  const std::size_t cap = spec.capacity();

  TrialRecord rec;
  for (const Index i : accepted) rec.value += instance.true_value(i);
  rec.ratio = rec.value / instance.top_sum(cap);
  rec.fill = static_cast<double>(accepted.size()) / static_cast<double>(cap);
  rec.no_accept = accepted.empty();
  rec.violation = !check_smoothness(outcome, instance, spec);
  rec.hits.resize(cap);
  for (std::size_t r = 0; r < cap; ++r) {
    const Index target = instance.index_of_rank(r + 1);
    rec.hits[r] = std::find(accepted.begin(), accepted.end(), target) != accepted.end();
  }
  return rec;
}

}  // namespace

std::span<const Algorithm> all_algorithms() { return kAllAlgorithms; }

std::string_view to_string(Algorithm algorithm) {
  for (const auto& [a, name] : kRegistry) {
    if (a == algorithm) return name;
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (const auto& [a, n] : kRegistry) {
    if (n == name) return a;
  }
  return std::nullopt;
}

bool is_multi_select(Algorithm algorithm) {
  return algorithm == Algorithm::KPegging || algorithm == Algorithm::FairHalf;
}

bool has_smoothness_guarantee(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::AdditivePegging:
    case Algorithm::MultiplicativePegging:
    case Algorithm::PeggingSymmetric:
    case Algorithm::KPegging:
      return true;
    default:
      return false;
  }
}

Outcome run_algorithm(const AlgorithmSpec& spec, const Instance& instance,
                      const Schedule& schedule) {
  switch (spec.algorithm) {
    case Algorithm::AdditivePegging: return additive_pegging_run(instance, schedule);
    case Algorithm::MultiplicativePegging: return multiplicative_pegging_run(instance, schedule);
    case Algorithm::PeggingSymmetric:
      return pegging_run(instance, schedule, ErrorAlgebra::symmetric_multiplicative());
    case Algorithm::Dynkin: return dynkin_run(instance, schedule, spec.dynkin_cutoff);
    case Algorithm::LearnedDynkin: return learned_dynkin_run(instance, schedule);
    case Algorithm::HighestPrediction: return highest_prediction_run(instance, schedule);
    case Algorithm::ValueMax: return value_max_secretary_run(instance, schedule, spec.value_max);
    case Algorithm::KPegging: return k_pegging_run(instance, spec.k, schedule);
    case Algorithm::FairHalf: return fair_half_run(instance, spec.k, schedule);
  }
  throw InvalidInput("unknown algorithm");
}

std::vector<Index> accepted_indices(const Outcome& outcome) {
  if (const auto* single = std::get_if<SelectionOutcome>(&outcome)) {
    if (single->accepted_index) return {*single->accepted_index};
    return {};
  }
  return std::get<SetSelection>(outcome).accepted_indices;
}

double smoothness_bound(const Instance& instance, const AlgorithmSpec& spec) {
  switch (spec.algorithm) {
    case Algorithm::AdditivePegging:
      return instance.top_sum(1) - 4.0 * prediction_error(instance, ErrorAlgebra::additive());
    case Algorithm::MultiplicativePegging:
      return instance.top_sum(1) *
             ratio_factor(prediction_error(instance, ErrorAlgebra::multiplicative()));
    case Algorithm::PeggingSymmetric:
      return instance.top_sum(1) *
             ratio_factor(prediction_error(instance, ErrorAlgebra::symmetric_multiplicative()));
    case Algorithm::KPegging:
      return instance.top_sum(spec.k) - 4.0 * static_cast<double>(spec.k) *
                                            prediction_error(instance, ErrorAlgebra::additive());
    default:
      return -std::numeric_limits<double>::infinity();
  }
}

bool check_smoothness(const Outcome& outcome, const Instance& instance,
                      const AlgorithmSpec& spec) {
  if (!has_smoothness_guarantee(spec.algorithm)) return true;
  double value = 0.0;
  for (const Index i : accepted_indices(outcome)) value += instance.true_value(i);
  const double optimum = instance.top_sum(spec.capacity());
  return value >= smoothness_bound(instance, spec) - kSmoothnessSlack * optimum;
}

std::uint64_t trial_seed(std::uint64_t master_seed, Family family, double eps,
                         std::uint64_t trial) {
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ static_cast<std::uint64_t>(family));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(eps));
  return splitmix64(h ^ trial);
}

std::vector<TrialStats> run_trials(std::span<const AlgorithmSpec> algorithms,
                                   const FamilySpec& family, std::size_t trials,
                                   std::uint64_t master_seed, const RunOptions& options) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  family.validate();
  for (const auto& spec : algorithms) {
    if (spec.capacity() > family.n) {
      throw InvalidInput("k must lie in [1, n], got k=" + std::to_string(spec.k) +
                         " with n=" + std::to_string(family.n));
    }
    if (is_multi_select(spec.algorithm) && spec.k < 1) throw InvalidInput("k must be at least 1");
    if (spec.algorithm == Algorithm::ValueMax) value_max_phases(spec.value_max);
  }

  const std::size_t algos = algorithms.size();
  std::vector<TrialRecord> records(trials * algos);

  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t t = begin; t < end; ++t) {
      Rng rng(trial_seed(master_seed, family.family, family.epsilon, t));
      const Instance instance = generate(family, rng);
      const Schedule schedule = sample_schedule(instance.size(), rng);
      for (std::size_t a = 0; a < algos; ++a) {
        records[t * algos + a] = record_trial(algorithms[a], instance, schedule);
      }
    }
  };

  unsigned workers = options.workers ? options.workers : std::thread::hardware_concurrency();
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(trials)));
  if (workers == 1) {
    work(0, trials);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (std::size_t begin = 0; begin < trials; begin += chunk) {
      pool.emplace_back(work, begin, std::min(trials, begin + chunk));
    }
  }

  // Sequential reduction in trial order keeps sums bit-identical for any
  // worker count.
  std::vector<TrialStats> stats(algos);
  for (std::size_t a = 0; a < algos; ++a) {
    TrialStats& s = stats[a];
    const std::size_t cap = algorithms[a].capacity();
    s.trials = trials;
    s.fairness.assign(cap, 0.0);
    double ratio_sum = 0.0, value_sum = 0.0, value_sq_sum = 0.0, fill_sum = 0.0;
    std::vector<std::size_t> hit_counts(cap, 0);
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialRecord& rec = records[t * algos + a];
      ratio_sum += rec.ratio;
      value_sum += rec.value;
      value_sq_sum += rec.value * rec.value;
      fill_sum += rec.fill;
      if (rec.no_accept) ++s.no_accept_count;
      if (rec.violation) {
        if (!s.first_violation_trial) s.first_violation_trial = t;
        ++s.smoothness_violations;
      }
      for (std::size_t r = 0; r < cap; ++r) hit_counts[r] += rec.hits[r] != 0;
    }
    const auto count = static_cast<double>(trials);
    s.competitive_ratio = ratio_sum / count;
    s.mean_value = value_sum / count;
    s.fill_rate = fill_sum / count;
    for (std::size_t r = 0; r < cap; ++r) s.fairness[r] = static_cast<double>(hit_counts[r]) / count;
    if (trials > 1) {
      const double var = (value_sq_sum - count * s.mean_value * s.mean_value) / (count - 1.0);
      s.value_stddev = std::sqrt(std::max(0.0, var));
    }
  }
  return stats;
}

TrialStats run_trials(const AlgorithmSpec& algorithm, const FamilySpec& family, std::size_t trials,
                      std::uint64_t master_seed, const RunOptions& options) {
  return run_trials(std::span<const AlgorithmSpec>(&algorithm, 1), family, trials, master_seed,
                    options)
      .front();
}

}  // namespace secretary
