#pragma once

// Exact acceptance distribution for small instances.
//
// Every shipped algorithm reads arrival times only through the arrival
// order and through which side of a few fixed threshold times each arrival
// falls on. Enumerating all n! orders together with every order-consistent
// split of the arrivals into threshold regions, each cell weighted by its
// exact probability, therefore yields the exact acceptance distribution.

#include <cstdint>
#include <string>
#include <vector>

#include "secretary/harness.hpp"

namespace secretary {

inline constexpr std::size_t kOracleMaxCandidates = 8;

struct ExactStats {
  std::vector<double> acceptance_probability;  // per candidate
  double expected_value = 0.0;                 // E[total accepted true value]
  double no_accept_probability = 0.0;
};

/// Fixed times at which the algorithm's behavior can change, ascending.
std::vector<double> threshold_times(const AlgorithmSpec& spec);

/// Throws InvalidInput for n > kOracleMaxCandidates.
ExactStats exact_oracle(const AlgorithmSpec& spec, const Instance& instance);

struct OracleComparison {
  ExactStats exact;
  std::vector<double> empirical;  // per-candidate acceptance frequency
  std::size_t trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  /// One line per candidate with exact vs empirical probability.
  std::string report() const;
};

/// Monte Carlo acceptance frequencies over `trials` fresh schedules for the
/// fixed instance, compared per candidate with the exact oracle.
OracleComparison compare_oracle_montecarlo(const AlgorithmSpec& spec, const Instance& instance,
                                           std::size_t trials, double tol, std::uint64_t seed);

}  // namespace secretary
