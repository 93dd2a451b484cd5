#include "secretary/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace secretary {

namespace {

// Region split: counts[r] of the n arrivals fall in region r. Jointly with
// a fixed arrival order the cell has probability
//   multinomial(n; counts) Π width_r^counts_r / n! = Π width_r^counts_r / counts_r!.
struct Split {
  std::vector<std::size_t> counts;
  double weight;
};

double factorial(std::size_t m) {
  double f = 1.0;
  for (std::size_t j = 2; j <= m; ++j) f *= static_cast<double>(j);
  return f;
}

void enumerate_splits(std::size_t remaining, std::size_t region, std::span<const double> widths,
                      std::vector<std::size_t>& counts, std::vector<Split>& out) {
  if (region + 1 == widths.size()) {
    counts[region] = remaining;
    double weight = 1.0;
    for (std::size_t r = 0; r < widths.size(); ++r) {
      weight *= std::pow(widths[r], static_cast<double>(counts[r])) / factorial(counts[r]);
    }
    if (weight > 0.0) out.push_back({counts, weight});
    return;
  }
  for (std::size_t c = 0; c <= remaining; ++c) {
    counts[region] = c;
    enumerate_splits(remaining - c, region + 1, widths, counts, out);
  }
}

}  // namespace

std::vector<double> threshold_times(const AlgorithmSpec& spec) {
  switch (spec.algorithm) {
    case Algorithm::AdditivePegging:
    case Algorithm::MultiplicativePegging:
    case Algorithm::PeggingSymmetric:
    case Algorithm::KPegging:
    case Algorithm::FairHalf:
      return {0.5};
    case Algorithm::Dynkin: return {spec.dynkin_cutoff};
    case Algorithm::LearnedDynkin: return {kLearnedDynkinCutoff};
    case Algorithm::HighestPrediction: return {};
    case Algorithm::ValueMax: {
      const auto phases = value_max_phases(spec.value_max);
      return {phases.t_star, phases.t_star_star};
    }
  }
  throw InvalidInput("unknown algorithm");
}

ExactStats exact_oracle(const AlgorithmSpec& spec, const Instance& instance) {
  const std::size_t n = instance.size();
  if (n > kOracleMaxCandidates) {
    throw InvalidInput("exact oracle supports at most " + std::to_string(kOracleMaxCandidates) +
                       " candidates, got " + std::to_string(n));
  }
  if (spec.capacity() > n) throw InvalidInput("k must lie in [1, n]");

  std::vector<double> bounds{0.0};
  for (const double t : threshold_times(spec)) bounds.push_back(t);
  bounds.push_back(1.0);
  const std::size_t regions = bounds.size() - 1;
  std::vector<double> widths(regions);
  for (std::size_t r = 0; r < regions; ++r) widths[r] = bounds[r + 1] - bounds[r];

  std::vector<Split> splits;
  std::vector<std::size_t> counts(regions, 0);
  enumerate_splits(n, 0, widths, counts, splits);

  // Representative arrival times per split: evenly spaced interior points.
  std::vector<std::vector<double>> slot_times;
  slot_times.reserve(splits.size());
  for (const auto& split : splits) {
    std::vector<double> slots;
    for (std::size_t r = 0; r < regions; ++r) {
      const double m = static_cast<double>(split.counts[r]);
      for (std::size_t j = 0; j < split.counts[r]; ++j) {
        slots.push_back(bounds[r] + widths[r] * (static_cast<double>(j) + 1.0) / (m + 1.0));
      }
    }
    slot_times.push_back(std::move(slots));
  }

  ExactStats stats;
  stats.acceptance_probability.assign(n, 0.0);
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<double> times(n);
  do {
    for (std::size_t s = 0; s < splits.size(); ++s) {
      for (std::size_t pos = 0; pos < n; ++pos) times[perm[pos]] = slot_times[s][pos];
      const Schedule schedule(times);
      const auto accepted = accepted_indices(run_algorithm(spec, instance, schedule));
      const double w = splits[s].weight;
      if (accepted.empty()) stats.no_accept_probability += w;
      for (const Index i : accepted) {
        stats.acceptance_probability[i] += w;
        stats.expected_value += w * instance.true_value(i);
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return stats;
}

std::string OracleComparison::report() const {
  std::ostringstream os;
  char line[128];
  for (std::size_t i = 0; i < empirical.size(); ++i) {
    std::snprintf(line, sizeof line, "  candidate %zu: exact %.6f  empirical %.6f  |diff| %.6f\n",
                  i + 1, exact.acceptance_probability[i], empirical[i],
                  std::abs(exact.acceptance_probability[i] - empirical[i]));
    os << line;
  }
  std::snprintf(line, sizeof line, "  max deviation %.6f (tolerance %.6f, %zu trials): %s\n",
                max_deviation, tolerance, trials, passed ? "PASS" : "FAIL");
  os << line;
  return os.str();
}

OracleComparison compare_oracle_montecarlo(const AlgorithmSpec& spec, const Instance& instance,
                                           std::size_t trials, double tol, std::uint64_t seed) {
  if (trials < 1) throw InvalidInput("trials must be at least 1");
  OracleComparison cmp;
  cmp.exact = exact_oracle(spec, instance);
  cmp.trials = trials;
  cmp.tolerance = tol;

  const std::size_t n = instance.size();
  std::vector<std::size_t> hits(n, 0);
  Rng rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    const Schedule schedule = sample_schedule(n, rng);
    for (const Index i : accepted_indices(run_algorithm(spec, instance, schedule))) ++hits[i];
  }
  cmp.empirical.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    cmp.empirical[i] = static_cast<double>(hits[i]) / static_cast<double>(trials);
    cmp.max_deviation =
        std::max(cmp.max_deviation, std::abs(cmp.empirical[i] - cmp.exact.acceptance_probability[i]));
  }
  cmp.passed = cmp.max_deviation <= tol;
  return cmp;
}

}  // namespace secretary
