#include "secretary/single_select.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace secretary {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFairnessTime = 0.5;

void require_matching(const Instance& instance, const Schedule& schedule) {
  if (instance.size() != schedule.size()) {
    throw InvalidInput("schedule has " + std::to_string(schedule.size()) +
                       " arrivals for an instance of " + std::to_string(instance.size()));
  }
}

// Membership bitmap for the pegged set plus its live size.
class PeggedSet {
 public:
  explicit PeggedSet(std::size_t n) : member_(n, 0) {}

  void insert(Index j) {
    member_[j] = 1;
    ++count_;
  }
  void erase(Index j) {
    member_[j] = 0;
    --count_;
  }
  bool contains(Index j) const { return member_[j] != 0; }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

 private:
  std::vector<char> member_;
  std::size_t count_ = 0;
};

}  // namespace

std::string_view to_string(AcceptRule rule) {
  switch (rule) {
    case AcceptRule::None: return "None";
    case AcceptRule::PeggedSingleton: return "PeggedSingleton";
    case AcceptRule::CandF: return "CandF";
    case AcceptRule::CandNotFEmptyPeg: return "CandNotF-EmptyPeg";
    case AcceptRule::NotCandF: return "NotCandF";
    case AcceptRule::PredictionMode: return "PredictionMode";
    case AcceptRule::SecretaryMode: return "SecretaryMode";
    case AcceptRule::Phase2: return "Phase2";
    case AcceptRule::Phase3: return "Phase3";
  }
  return "?";
}

bool operator==(const SelectionOutcome& a, const SelectionOutcome& b) {
  return a.accepted_index == b.accepted_index && a.accepted_value == b.accepted_value &&
         a.acceptance_time == b.acceptance_time && a.acceptance_rule == b.acceptance_rule;
}

SelectionOutcome additive_pegging_run(const Instance& instance, const Schedule& schedule) {
  require_matching(instance, schedule);
  const auto order = schedule.arrival_order();
  const Index best_pred = instance.best_predicted();
  const double best_pred_value = instance.predicted_value(best_pred);

  PeggedSet pegged(instance.size());
  RunningError running;
  double record = kNegInf;

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Index i = order[pos];
    const double u = instance.true_value(i);
    const double t = schedule.time(i);

    if (pegged.contains(i)) {
      if (pegged.size() == 1) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::PeggedSingleton);
      }
      pegged.erase(i);
    }

    const bool fair = u > record && t > kFairnessTime;
    const bool cand = i == best_pred;
    running.feed(std::abs(instance.predicted_value(i) - u));
    record = std::max(record, u);
    const double eps_t = running.value();

    if (cand && fair) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::CandF);
    }
    if (cand) {
      for (std::size_t later = pos + 1; later < order.size(); ++later) {
        const Index j = order[later];
        if (u < instance.predicted_value(j) + eps_t) pegged.insert(j);
      }
      if (pegged.empty()) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::CandNotFEmptyPeg);
      }
    } else if (fair) {
      if (u > best_pred_value - eps_t) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::NotCandF);
      }
    }
  }
  return SelectionOutcome::none();
}

SelectionOutcome pegging_run(const Instance& instance, const Schedule& schedule,
                             const ErrorAlgebra& algebra) {
  require_matching(instance, schedule);
  const auto order = schedule.arrival_order();
  const Index best_pred = instance.best_predicted();
  const double best_pred_value = instance.predicted_value(best_pred);

  PeggedSet pegged(instance.size());
  RunningError running;
  double record = kNegInf;

  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const Index i = order[pos];
    const double u = instance.true_value(i);
    const double t = schedule.time(i);

    if (pegged.contains(i)) {
      if (pegged.size() == 1) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::PeggedSingleton);
      }
      pegged.erase(i);
    }

    const bool fair = u > record && t > kFairnessTime;
    const bool cand = i == best_pred;
    running.feed(algebra.error(u, instance.predicted_value(i)));
    record = std::max(record, u);
    const double eps_t = running.value();

    if (cand && fair) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::CandF);
    }
    if (!cand && fair) {
      if (algebra.raise(u, eps_t) > best_pred_value) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::NotCandF);
      }
    } else if (cand) {
      const double floor = algebra.lower(u, eps_t);
      for (std::size_t later = pos + 1; later < order.size(); ++later) {
        const Index j = order[later];
        if (floor < instance.predicted_value(j)) pegged.insert(j);
      }
      if (pegged.empty()) {
        return SelectionOutcome::accept(instance, schedule, i, AcceptRule::CandNotFEmptyPeg);
      }
    }
  }
  return SelectionOutcome::none();
}

SelectionOutcome multiplicative_pegging_run(const Instance& instance, const Schedule& schedule) {
  return pegging_run(instance, schedule, ErrorAlgebra::multiplicative());
}

SelectionOutcome dynkin_run(const Instance& instance, const Schedule& schedule, double cutoff) {
  require_matching(instance, schedule);
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw InvalidInput("dynkin: cutoff must lie in (0, 1)");
  double record = kNegInf;
  for (const Index i : schedule.arrival_order()) {
    const double u = instance.true_value(i);
    if (schedule.time(i) > cutoff && u > record) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::SecretaryMode);
    }
    record = std::max(record, u);
  }
  return SelectionOutcome::none();
}

SelectionOutcome learned_dynkin_run(const Instance& instance, const Schedule& schedule) {
  require_matching(instance, schedule);
  const Index best_pred = instance.best_predicted();
  bool prediction_mode = true;
  double record = kNegInf;
  for (const Index i : schedule.arrival_order()) {
    const double u = instance.true_value(i);
    const double tau = record;
    record = std::max(record, u);
    if (std::abs(1.0 - instance.predicted_value(i) / u) > kLearnedDynkinThreshold) {
      prediction_mode = false;
    }
    if (prediction_mode && i == best_pred) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::PredictionMode);
    }
    if (!prediction_mode && schedule.time(i) > kLearnedDynkinCutoff && u > tau) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::SecretaryMode);
    }
  }
  return SelectionOutcome::none();
}

SelectionOutcome highest_prediction_run(const Instance& instance, const Schedule& schedule) {
  require_matching(instance, schedule);
  return SelectionOutcome::accept(instance, schedule, instance.best_predicted(),
                                  AcceptRule::PredictionMode);
}

ValueMaxPhases value_max_phases(const ValueMaxParams& params) {
  if (!(params.c >= 1.0)) throw InvalidInput("value-max: c must be at least 1");
  if (!(params.lambda >= 0.0)) throw InvalidInput("value-max: lambda must be nonnegative");
  const double x = -1.0 / (params.c * std::exp(1.0));
  return {std::exp(lambert_wm1(x)), std::exp(lambert_w0(x))};
}

SelectionOutcome value_max_secretary_run(const Instance& instance, const Schedule& schedule,
                                         const ValueMaxParams& params) {
  require_matching(instance, schedule);
  const auto [t_star, t_star_star] = value_max_phases(params);
  double predicted_max = kNegInf;
  for (const double p : instance.predicted_values()) predicted_max = std::max(predicted_max, p);
  const double prediction_floor = predicted_max - params.lambda;

  double tau_star = kNegInf;       // best arrival strictly before t*
  double tau_star_star = kNegInf;  // best arrival strictly before t**
  for (const Index i : schedule.arrival_order()) {
    const double u = instance.true_value(i);
    const double t = schedule.time(i);
    if (t > t_star && t < t_star_star && u > std::max(tau_star, prediction_floor)) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::Phase2);
    }
    if (t >= t_star_star && u > tau_star_star) {
      return SelectionOutcome::accept(instance, schedule, i, AcceptRule::Phase3);
    }
    if (t < t_star) tau_star = std::max(tau_star, u);
    if (t < t_star_star) tau_star_star = std::max(tau_star_star, u);
  }
  return SelectionOutcome::none();
}

}  // namespace secretary
