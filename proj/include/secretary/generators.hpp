#pragma once

// Instance families for the benchmark sweep and the two baseline
// counterexamples.

#include <optional>
#include <string_view>
#include <utility>

#include "secretary/core.hpp"

namespace secretary {

enum class Family {
  AlmostConstant,
  Uniform,
  Adversarial,
  Unfair,
  LearnedDynkinCounter,
  ValueMaxCounter,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Family plus its error knob. For LearnedDynkinCounter `epsilon` is θ'.
struct FamilySpec {
  Family family = Family::Uniform;
  double epsilon = 0.0;
  std::size_t n = 100;

  /// Throws InvalidInput when epsilon or n is out of range for the family.
  void validate() const;
};

/// One candidate (uniformly chosen) worth 1/(1 − eps), the rest worth 1; all predictions 1.
Instance gen_almost_constant(double eps, std::size_t n, Rng& rng);

/// u_i ~ Exp(1), û_i = δ_i u_i with δ_i ~ U[1 − eps, 1 + eps].
Instance gen_uniform(double eps, std::size_t n, Rng& rng);

/// u_i ~ Exp(1); the top half by true value is deflated by (1 − eps), the
/// bottom half inflated by (1 + eps).
Instance gen_adversarial(double eps, std::size_t n, Rng& rng);

/// u_i ~ U[1 − eps/4, 1 + eps/4]; predictions are the true values reassigned
/// in inverted rank order, so the best prediction goes to the worst candidate.
Instance gen_unfair(double eps, std::size_t n, Rng& rng);

/// u = (1 + θ'/2, 1), û = (1 + θ'/2, 1 + θ') for 0 < θ' < 0.646.
Instance counterexample_learned_dynkin(double theta_prime);

/// u_1 = 1, the rest distinct in (0, eps]; û_1 = 1 − eps and û_i = u_i
/// otherwise. Returns the instance together with û* = 1 − eps.
std::pair<Instance, double> counterexample_value_max(double eps, std::size_t n, Rng& rng);

/// Dispatches on spec.family.
Instance generate(const FamilySpec& spec, Rng& rng);

}  // namespace secretary
