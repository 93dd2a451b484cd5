#pragma once

// Problem model shared by every algorithm: instances, arrival schedules,
// the error algebra that parameterizes Pegging, and Lambert W.

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace secretary {

using Index = std::size_t;
using Rng = std::mt19937_64;

/// Thrown when an instance, schedule or parameter fails validation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Uniform draw in [0, 1) from the top 53 bits; independent of the
/// standard library's distribution implementations so seeded runs are
/// portable.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Exp(1) draw by inversion.
double exponential1(Rng& rng);

/// n candidates with true values u and predictions û, both strictly positive.
///
/// Argmax and rank queries break ties toward the lower index.
class Instance {
 public:
  Instance(std::vector<double> true_values, std::vector<double> predicted_values);

  std::size_t size() const { return true_values_.size(); }
  double true_value(Index i) const { return true_values_[i]; }
  double predicted_value(Index i) const { return predicted_values_[i]; }
  std::span<const double> true_values() const { return true_values_; }
  std::span<const double> predicted_values() const { return predicted_values_; }

  /// i*: the candidate with the highest true value.
  Index best_true() const { return by_true_rank_.front(); }
  /// î: the candidate with the highest prediction.
  Index best_predicted() const { return by_predicted_rank_.front(); }

  /// Index of the candidate with the rank-th highest true value, rank in [1, n].
  Index index_of_rank(std::size_t rank) const;
  /// All indices in decreasing true value.
  std::span<const Index> by_true_rank() const { return by_true_rank_; }
  /// All indices in decreasing predicted value.
  std::span<const Index> by_predicted_rank() const { return by_predicted_rank_; }

  /// Sum of the k highest true values.
  double top_sum(std::size_t k) const;

 private:
  std::vector<double> true_values_;
  std::vector<double> predicted_values_;
  std::vector<Index> by_true_rank_;
  std::vector<Index> by_predicted_rank_;
};

Instance make_instance(std::vector<double> true_values, std::vector<double> predicted_values);

Index best_true_index(const Instance& instance);
Index best_predicted_index(const Instance& instance);
Index rank_accessor(const Instance& instance, std::size_t rank);

/// Indices sorted by decreasing value; equal values keep ascending index order.
std::vector<Index> descending_order(std::span<const double> values);

/// Arrival times in [0, 1] for each candidate plus the induced arrival order.
class Schedule {
 public:
  /// Times must lie in [0, 1] and be pairwise distinct.
  explicit Schedule(std::vector<double> arrival_times);

  std::size_t size() const { return times_.size(); }
  double time(Index i) const { return times_[i]; }
  std::span<const double> arrival_times() const { return times_; }
  /// Candidates sorted by ascending arrival time.
  std::span<const Index> arrival_order() const { return order_; }

 private:
  friend Schedule sample_schedule(std::size_t n, Rng& rng);
  Schedule(std::vector<double> arrival_times, std::vector<Index> order)
      : times_(std::move(arrival_times)), order_(std::move(order)) {}

  std::vector<double> times_;
  std::vector<Index> order_;
};

/// n i.i.d. Uniform[0,1] arrival times; colliding draws are redrawn.
Schedule sample_schedule(std::size_t n, Rng& rng);

/// (⊕, ⊖, 𝟘, ε) bundle. Plain function pointers keep the type a trivially
/// copyable value that can be shared across threads.
struct ErrorAlgebra {
  using BinaryOp = double (*)(double, double);

  std::string_view name;
  BinaryOp combine;   // ⊕
  BinaryOp inverse;   // ⊖
  double identity;    // 𝟘
  BinaryOp error_fn;  // ε(u, û)

  double error(double u, double predicted) const { return error_fn(u, predicted); }
  /// u ⊕ (𝟘 + e)
  double raise(double u, double e) const { return combine(u, identity + e); }
  /// u ⊕ (𝟘 − e)
  double lower(double u, double e) const { return combine(u, identity - e); }

  /// ⊕ = +, 𝟘 = 0, ε = |û − u|
  static ErrorAlgebra additive();
  /// ⊕ = ×, 𝟘 = 1, ε = |1 − û/u|
  static ErrorAlgebra multiplicative();
  /// ⊕ = ×, 𝟘 = 1, ε = |1 − max(u,û)/min(u,û)|
  static ErrorAlgebra symmetric_multiplicative();
};

/// max_i ε(u_i, û_i).
double prediction_error(const Instance& instance, const ErrorAlgebra& algebra);

/// True iff u ⊕ (𝟘 + ε) ≥ û ≥ u ⊕ (𝟘 − ε), with 1e-12 relative slack.
bool algebra_assumption_check(const ErrorAlgebra& algebra, double u, double predicted);

/// Maximum per-candidate error among the arrivals fed so far.
class RunningError {
 public:
  void feed(double candidate_error) {
    if (candidate_error > current_max_) current_max_ = candidate_error;
  }
  double value() const { return current_max_; }

 private:
  double current_max_ = 0.0;
};

/// Principal branch W0 on [−1/e, ∞).
double lambert_w0(double x);
/// Lower branch W−1 on [−1/e, 0).
double lambert_wm1(double x);

}  // namespace secretary
