#include "secretary/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace secretary {

double exponential1(Rng& rng) { return -std::log1p(-uniform01(rng)); }

std::vector<Index> descending_order(std::span<const double> values) {
  std::vector<Index> order(values.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Index a, Index b) { return values[a] > values[b]; });
  return order;
}

Instance::Instance(std::vector<double> true_values, std::vector<double> predicted_values)
    : true_values_(std::move(true_values)), predicted_values_(std::move(predicted_values)) {
  if (true_values_.size() != predicted_values_.size()) {
    throw InvalidInput("instance: " + std::to_string(true_values_.size()) + " true values but " +
                       std::to_string(predicted_values_.size()) + " predictions");
  }
  if (true_values_.empty()) throw InvalidInput("instance: needs at least one candidate");
  for (Index i = 0; i < true_values_.size(); ++i) {
    if (!(true_values_[i] > 0.0) || !std::isfinite(true_values_[i])) {
      throw InvalidInput("instance: nonpositive true value at index " + std::to_string(i + 1));
    }
    if (!(predicted_values_[i] > 0.0) || !std::isfinite(predicted_values_[i])) {
      throw InvalidInput("instance: nonpositive predicted value at index " +
                         std::to_string(i + 1));
    }
  }
  by_true_rank_ = descending_order(true_values_);
  by_predicted_rank_ = descending_order(predicted_values_);
}

Index Instance::index_of_rank(std::size_t rank) const {
  if (rank < 1 || rank > size()) {
    throw std::out_of_range("rank " + std::to_string(rank) + " outside [1, " +
                            std::to_string(size()) + "]");
  }
  return by_true_rank_[rank - 1];
}

double Instance::top_sum(std::size_t k) const {
  k = std::min(k, size());
  double sum = 0.0;
  for (std::size_t r = 0; r < k; ++r) sum += true_values_[by_true_rank_[r]];
  return sum;
}

Instance make_instance(std::vector<double> true_values, std::vector<double> predicted_values) {
  return Instance(std::move(true_values), std::move(predicted_values));
}

Index best_true_index(const Instance& instance) { return instance.best_true(); }
Index best_predicted_index(const Instance& instance) { return instance.best_predicted(); }
Index rank_accessor(const Instance& instance, std::size_t rank) {
  return instance.index_of_rank(rank);
}

Schedule::Schedule(std::vector<double> arrival_times) : times_(std::move(arrival_times)) {
  if (times_.empty()) throw InvalidInput("schedule: needs at least one arrival");
  for (double t : times_) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidInput("schedule: arrival time outside [0, 1]");
  }
  order_.resize(times_.size());
  std::iota(order_.begin(), order_.end(), Index{0});
  std::sort(order_.begin(), order_.end(), [&](Index a, Index b) { return times_[a] < times_[b]; });
  for (std::size_t p = 1; p < order_.size(); ++p) {
    if (times_[order_[p]] == times_[order_[p - 1]]) {
      throw InvalidInput("schedule: arrival times must be distinct");
    }
  }
}

Schedule sample_schedule(std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidInput("schedule: n must be at least 1");
  std::vector<double> times(n);
  for (auto& t : times) t = uniform01(rng);
  std::vector<Index> order(n);
  for (;;) {
    std::iota(order.begin(), order.end(), Index{0});
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return times[a] < times[b]; });
    bool collided = false;
    for (std::size_t p = 1; p < n; ++p) {
      if (times[order[p]] == times[order[p - 1]]) {
        times[order[p]] = uniform01(rng);
        collided = true;
      }
    }
    if (!collided) break;
  }
  return Schedule(std::move(times), std::move(order));
}

namespace {

double add(double a, double b) { return a + b; }
double subtract(double a, double b) { return a - b; }
double multiply(double a, double b) { return a * b; }
double divide(double a, double b) { return a / b; }
double absolute_error(double u, double p) { return std::abs(p - u); }
double relative_error(double u, double p) { return std::abs(1.0 - p / u); }
double symmetric_ratio_error(double u, double p) {
  return std::abs(1.0 - std::max(u, p) / std::min(u, p));
}

}  // namespace

ErrorAlgebra ErrorAlgebra::additive() {
  return {"additive", &add, &subtract, 0.0, &absolute_error};
}

ErrorAlgebra ErrorAlgebra::multiplicative() {
  return {"multiplicative", &multiply, &divide, 1.0, &relative_error};
}

ErrorAlgebra ErrorAlgebra::symmetric_multiplicative() {
  return {"symmetric-multiplicative", &multiply, &divide, 1.0, &symmetric_ratio_error};
}

double prediction_error(const Instance& instance, const ErrorAlgebra& algebra) {
  double worst = 0.0;
  for (Index i = 0; i < instance.size(); ++i) {
    worst = std::max(worst, algebra.error(instance.true_value(i), instance.predicted_value(i)));
  }
  return worst;
}

bool algebra_assumption_check(const ErrorAlgebra& algebra, double u, double predicted) {
  const double e = algebra.error(u, predicted);
  const double upper = algebra.raise(u, e);
  const double lower = algebra.lower(u, e);
  const double slack = 1e-12 * std::max({std::abs(u), std::abs(predicted), 1.0});
  return upper >= predicted - slack && predicted >= lower - slack;
}

namespace {

constexpr double kInvE = 0.36787944117144233;  // e^-1

// Halley's method on f(w) = w e^w − x.
double halley(double x, double w) {
  for (int it = 0; it < 50; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 1e-14 * (1.0 + std::abs(w))) break;
  }
  return w;
}

// p = sqrt(2(ex + 1)); both branches expand in ±p about w = −1.
double branch_point_p(double x) {
  const double q = 2.0 * (std::exp(1.0) * x + 1.0);
  return q > 0.0 ? std::sqrt(q) : 0.0;
}

void check_domain(double x) {
  if (std::isnan(x) || x < -kInvE * (1.0 + 1e-15)) {
    throw std::domain_error("lambert W: argument below -1/e");
  }
}

}  // namespace

double lambert_w0(double x) {
  check_domain(x);
  if (x == 0.0) return 0.0;
  const double p = branch_point_p(x);
  if (p == 0.0) return -1.0;
  double w;
  if (p < 0.5) {
    w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  } else if (x < 3.0) {
    w = std::log1p(x) * 0.6;
  } else {
    const double l1 = std::log(x);
    w = l1 - std::log(l1);
  }
  return halley(x, w);
}

double lambert_wm1(double x) {
  check_domain(x);
  if (x >= 0.0) throw std::domain_error("lambert W-1: argument must be negative");
  const double p = branch_point_p(x);
  if (p == 0.0) return -1.0;
  double w;
  if (p < 0.5) {
    w = -1.0 - p - p * p / 3.0 - 11.0 / 72.0 * p * p * p;
  } else {
    const double l1 = std::log(-x);
    const double l2 = std::log(-l1);
    w = l1 - l2 + l2 / l1;
    if (w > -1.0) w = -1.0 - p;
  }
  return halley(x, w);
}

}  // namespace secretary
