#pragma once

// Single-choice online algorithms. Every runner replays one full arrival
// schedule and returns which candidate, if any, it hired.

#include <optional>
#include <string_view>

#include "secretary/core.hpp"

namespace secretary {

/// Which branch of the algorithm fired the acceptance.
enum class AcceptRule {
  None,
  PeggedSingleton,   // last remaining member of the pegged set arrived
  CandF,             // î arrived and is a record after 1/2
  CandNotFEmptyPeg,  // î arrived, not a record after 1/2, nobody left to peg
  NotCandF,          // record after 1/2 close enough to û_î
  PredictionMode,    // accepted on the strength of the prediction alone
  SecretaryMode,     // classical record-after-cutoff acceptance
  Phase2,
  Phase3,
};

std::string_view to_string(AcceptRule rule);

struct SelectionOutcome {
  std::optional<Index> accepted_index;
  std::optional<double> accepted_value;
  std::optional<double> acceptance_time;
  AcceptRule acceptance_rule = AcceptRule::None;

  bool accepted() const { return accepted_index.has_value(); }

  static SelectionOutcome none() { return {}; }
  static SelectionOutcome accept(const Instance& instance, const Schedule& schedule, Index i,
                                 AcceptRule rule) {
    return {i, instance.true_value(i), schedule.time(i), rule};
  }
};

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b);

/// Additive-Pegging, written with the additive comparisons inline.
SelectionOutcome additive_pegging_run(const Instance& instance, const Schedule& schedule);

/// Pegging over an arbitrary error algebra satisfying the sandwich assumption.
SelectionOutcome pegging_run(const Instance& instance, const Schedule& schedule,
                             const ErrorAlgebra& algebra);

/// Pegging with ⊕ = × and ε(u, û) = |1 − û/u|.
SelectionOutcome multiplicative_pegging_run(const Instance& instance, const Schedule& schedule);

/// Time fraction the classical secretary rule observes before hiring.
inline constexpr double kDynkinCutoff = 0.36787944117144233;

/// Continuous-time Dynkin: skip arrivals up to `cutoff`, then hire the first record.
SelectionOutcome dynkin_run(const Instance& instance, const Schedule& schedule,
                            double cutoff = kDynkinCutoff);

inline constexpr double kLearnedDynkinThreshold = 0.646;
inline constexpr double kLearnedDynkinCutoff = 0.313;

/// Trusts the prediction until some candidate's relative error exceeds 0.646,
/// then falls back to a record rule after t = 0.313.
SelectionOutcome learned_dynkin_run(const Instance& instance, const Schedule& schedule);

/// Hires î on arrival.
SelectionOutcome highest_prediction_run(const Instance& instance, const Schedule& schedule);

struct ValueMaxParams {
  double c = 1.0;       // c ≥ 1
  double lambda = 0.0;  // λ ≥ 0
};

/// Phase boundaries t* = exp(W−1(−1/(ce))) and t** = exp(W0(−1/(ce))).
struct ValueMaxPhases {
  double t_star;
  double t_star_star;
};

ValueMaxPhases value_max_phases(const ValueMaxParams& params);

/// Value-maximization secretary fed the scalar prediction û* = max_i û_i.
SelectionOutcome value_max_secretary_run(const Instance& instance, const Schedule& schedule,
                                         const ValueMaxParams& params = {});

}  // namespace secretary
