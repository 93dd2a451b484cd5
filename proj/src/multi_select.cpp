#include "secretary/multi_select.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

namespace secretary {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kFairnessTime = 0.5;
constexpr std::size_t kNoPeg = std::numeric_limits<std::size_t>::max();

void require_k(const Instance& instance, std::size_t k, const Schedule& schedule) {
  if (instance.size() != schedule.size()) {
    throw InvalidInput("schedule has " + std::to_string(schedule.size()) +
                       " arrivals for an instance of " + std::to_string(instance.size()));
  }
  if (k < 1 || k > instance.size()) {
    throw InvalidInput("k must lie in [1, n], got k=" + std::to_string(k) +
                       " with n=" + std::to_string(instance.size()));
  }
}

// k-th highest of the values pushed so far; −∞ until k values are in.
class KthLargest {
 public:
  explicit KthLargest(std::size_t k) : k_(k) {}

  double value() const { return heap_.size() < k_ ? kNegInf : heap_.top(); }
  void push(double v) {
    if (heap_.size() < k_) {
      heap_.push(v);
    } else if (v > heap_.top()) {
      heap_.pop();
      heap_.push(v);
    }
  }

 private:
  std::size_t k_;
  std::priority_queue<double, std::vector<double>, std::greater<>> heap_;
};

}  // namespace

std::string_view to_string(SetRule rule) {
  switch (rule) {
    case SetRule::Case1: return "Case1";
    case SetRule::Case2: return "Case2";
    case SetRule::Case3a: return "Case3a";
    case SetRule::Case4a: return "Case4a";
    case SetRule::Case4b: return "Case4b";
    case SetRule::FairHalf: return "FairHalf";
  }
  return "?";
}

bool SetSelection::contains(Index i) const {
  return std::find(accepted_indices.begin(), accepted_indices.end(), i) != accepted_indices.end();
}

double SetSelection::total_value(const Instance& instance) const {
  double sum = 0.0;
  for (const Index i : accepted_indices) sum += instance.true_value(i);
  return sum;
}

SetSelection k_pegging_run(const Instance& instance, std::size_t k, const Schedule& schedule,
                           const KPeggingOptions& options) {
  require_k(instance, k, schedule);
  const std::size_t n = instance.size();

  // label 0 is the highest prediction; [k] = labels 0..k-1.
  const auto by_pred = instance.by_predicted_rank();
  std::vector<std::size_t> label_of(n);
  for (std::size_t label = 0; label < n; ++label) label_of[by_pred[label]] = label;
  const auto u = [&](std::size_t label) { return instance.true_value(by_pred[label]); };
  const auto u_hat = [&](std::size_t label) { return instance.predicted_value(by_pred[label]); };

  std::set<std::size_t> hopefuls;
  for (std::size_t label = 0; label < k; ++label) hopefuls.insert(label);
  std::set<std::size_t> blaming;
  std::vector<char> pegged(n, 0);
  std::vector<std::size_t> peg(n, kNoPeg);      // blamer -> pegged
  std::vector<std::size_t> peg_inv(n, kNoPeg);  // pegged -> blamer

  SetSelection result;
  KthLargest tau(k);
  RunningError running;

  const auto accept = [&](std::size_t label, SetRule rule) {
    result.accepted_indices.push_back(by_pred[label]);
    result.per_index_rule.push_back(rule);
  };

  const auto check = [&] {
    if (blaming.size() + hopefuls.size() + result.size() != k) {
      throw std::logic_error("k-pegging: |B| + |H| + |S| != k");
    }
    std::size_t pegged_count = 0;
    for (std::size_t label = 0; label < n; ++label) pegged_count += pegged[label] != 0;
    if (pegged_count != blaming.size()) throw std::logic_error("k-pegging: |P| != |B|");
    for (const std::size_t b : blaming) {
      if (b >= k || hopefuls.count(b) != 0) {
        throw std::logic_error("k-pegging: B must be disjoint from H and inside [k]");
      }
      if (peg[b] == kNoPeg || !pegged[peg[b]] || peg_inv[peg[b]] != b) {
        throw std::logic_error("k-pegging: peg map and P disagree");
      }
    }
    for (const std::size_t h : hopefuls) {
      if (h >= k) throw std::logic_error("k-pegging: H must lie inside [k]");
    }
  };

  const auto order = schedule.arrival_order();
  for (std::size_t pos = 0; pos < order.size() && result.size() < k; ++pos) {
    const Index original = order[pos];
    const std::size_t i = label_of[original];
    const double ui = u(i);
    const double t = schedule.time(original);

    const double kth_before = tau.value();
    tau.push(ui);
    running.feed(std::abs(u_hat(i) - ui));
    const double eps_t = running.value();

    if (pegged[i]) {  // Case 1
      accept(i, SetRule::Case1);
      pegged[i] = 0;
      blaming.erase(peg_inv[i]);
      peg[peg_inv[i]] = kNoPeg;
      peg_inv[i] = kNoPeg;
      if (options.check_invariants) check();
      continue;
    }

    const bool fair = ui > kth_before && t > kFairnessTime;
    const bool cand = hopefuls.count(i) != 0;

    if (cand && fair) {  // Case 2
      accept(i, SetRule::Case2);
      hopefuls.erase(i);
    } else if (cand) {  // Case 3
      std::size_t target = kNoPeg;
      for (std::size_t later = pos + 1; later < order.size(); ++later) {
        const std::size_t j = label_of[order[later]];
        if (j >= k && !pegged[j] && ui < u_hat(j) + eps_t) target = std::min(target, j);
      }
      hopefuls.erase(i);
      if (target == kNoPeg) {
        accept(i, SetRule::Case3a);
      } else {
        pegged[target] = 1;
        blaming.insert(i);
        peg[i] = target;
        peg_inv[target] = i;
      }
    } else if (fair) {  // Case 4
      const auto blamer = std::find_if(blaming.begin(), blaming.end(),
                                       [&](std::size_t b) { return ui > u(b); });
      if (blamer != blaming.end()) {
        const std::size_t b = *blamer;
        accept(i, SetRule::Case4a);
        blaming.erase(blamer);
        pegged[peg[b]] = 0;
        peg_inv[peg[b]] = kNoPeg;
        peg[b] = kNoPeg;
      } else {
        const auto hopeful = std::find_if(hopefuls.begin(), hopefuls.end(),
                                          [&](std::size_t h) { return ui > u_hat(h) - eps_t; });
        if (hopeful != hopefuls.end()) {
          accept(i, SetRule::Case4b);
          hopefuls.erase(hopeful);
        }
      }
    }
    if (options.check_invariants) check();
  }
  return result;
}

SetSelection fair_half_run(const Instance& instance, std::size_t k, const Schedule& schedule) {
  require_k(instance, k, schedule);
  SetSelection result;
  KthLargest tau(k);
  for (const Index i : schedule.arrival_order()) {
    if (result.size() == k) break;
    const double ui = instance.true_value(i);
    const double kth_before = tau.value();
    tau.push(ui);
    if (schedule.time(i) > kFairnessTime && ui > kth_before) {
      result.accepted_indices.push_back(i);
      result.per_index_rule.push_back(SetRule::FairHalf);
    }
  }
  return result;
}

}  // namespace secretary
