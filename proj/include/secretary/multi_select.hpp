#pragma once

// k-choice online algorithms.

#include <string_view>
#include <vector>

#include "secretary/core.hpp"

namespace secretary {

/// Branch of k-Pegging that added a candidate to the solution.
enum class SetRule { Case1, Case2, Case3a, Case4a, Case4b, FairHalf };

std::string_view to_string(SetRule rule);

struct SetSelection {
  std::vector<Index> accepted_indices;  // in acceptance order, original labels
  std::vector<SetRule> per_index_rule;

  std::size_t size() const { return accepted_indices.size(); }
  bool contains(Index i) const;
  double total_value(const Instance& instance) const;
};

struct KPeggingOptions {
  /// Check |B| + |H| + |S| = k and peg-map consistency after every arrival;
  /// violations throw std::logic_error.
  bool check_invariants = false;
};

/// k-Pegging. Candidates are relabeled internally by decreasing prediction,
/// "arbitrary" choices pick the highest-predicted eligible candidate, and a
/// Case 1 acceptance ends processing of that arrival.
SetSelection k_pegging_run(const Instance& instance, std::size_t k, const Schedule& schedule,
                           const KPeggingOptions& options = {});

/// Reject arrivals before 1/2; afterwards take any candidate among the k best
/// seen so far while |S| < k.
SetSelection fair_half_run(const Instance& instance, std::size_t k, const Schedule& schedule);

}  // namespace secretary
