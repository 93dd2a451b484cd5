#include "secretary/generators.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "secretary/single_select.hpp"

namespace secretary {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 6> kFamilyNames{{
    {Family::AlmostConstant, "almost-constant"},
    {Family::Uniform, "uniform"},
    {Family::Adversarial, "adversarial"},
    {Family::Unfair, "unfair"},
    {Family::LearnedDynkinCounter, "learned-dynkin-counter"},
    {Family::ValueMaxCounter, "value-max-counter"},
}};

void require_eps(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) throw InvalidInput("eps must lie in [0, 1)");
}

void require_n(std::size_t n) {
  if (n < 1) throw InvalidInput("n must be at least 1");
}

// Positive Exp(1) draw; zero has probability 2^-53 but would break the
// positivity invariant.
double positive_exponential(Rng& rng) {
  for (;;) {
    const double v = exponential1(rng);
    if (v > 0.0) return v;
  }
}

}  // namespace

std::string_view to_string(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "?";
}

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  return std::nullopt;
}

void FamilySpec::validate() const {
  switch (family) {
    case Family::LearnedDynkinCounter:
      if (!(epsilon > 0.0 && epsilon < kLearnedDynkinThreshold)) {
        throw InvalidInput("learned-dynkin counterexample needs 0 < theta' < 0.646");
      }
      return;
    case Family::ValueMaxCounter:
      if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidInput("value-max counterexample needs eps in (0, 1)");
      }
      if (n < 2) throw InvalidInput("value-max counterexample needs n >= 2");
      return;
    default:
      require_eps(epsilon);
      require_n(n);
  }
}

Instance gen_almost_constant(double eps, std::size_t n, Rng& rng) {
  require_eps(eps);
  require_n(n);
  std::vector<double> u(n, 1.0);
  const auto special = static_cast<std::size_t>(uniform01(rng) * static_cast<double>(n));
  u[std::min(special, n - 1)] = 1.0 / (1.0 - eps);
  return Instance(std::move(u), std::vector<double>(n, 1.0));
}

Instance gen_uniform(double eps, std::size_t n, Rng& rng) {
  require_eps(eps);
  require_n(n);
  std::vector<double> u(n), u_hat(n);
  for (std::size_t i = 0; i < n; ++i) {
    u[i] = positive_exponential(rng);
    const double delta = 1.0 - eps + 2.0 * eps * uniform01(rng);
    u_hat[i] = delta * u[i];
  }
  return Instance(std::move(u), std::move(u_hat));
}

Instance gen_adversarial(double eps, std::size_t n, Rng& rng) {
  require_eps(eps);
  require_n(n);
  std::vector<double> u(n);
  for (auto& v : u) v = positive_exponential(rng);
  const auto ranked = descending_order(u);
  std::vector<double> u_hat(n);
  for (std::size_t r = 0; r < n; ++r) {
    const Index i = ranked[r];
    // Odd n: the median lands in the bottom half.
    u_hat[i] = r < n / 2 ? (1.0 - eps) * u[i] : (1.0 + eps) * u[i];
  }
  return Instance(std::move(u), std::move(u_hat));
}

Instance gen_unfair(double eps, std::size_t n, Rng& rng) {
  require_eps(eps);
  require_n(n);
  std::vector<double> u(n);
  for (auto& v : u) v = 1.0 - eps / 4.0 + (eps / 2.0) * uniform01(rng);
  const auto ranked = descending_order(u);
  std::vector<double> u_hat(n);
  for (std::size_t r = 0; r < n; ++r) u_hat[ranked[r]] = u[ranked[n - 1 - r]];
  return Instance(std::move(u), std::move(u_hat));
}

Instance counterexample_learned_dynkin(double theta_prime) {
  FamilySpec{Family::LearnedDynkinCounter, theta_prime, 2}.validate();
  return Instance({1.0 + theta_prime / 2.0, 1.0}, {1.0 + theta_prime / 2.0, 1.0 + theta_prime});
}

std::pair<Instance, double> counterexample_value_max(double eps, std::size_t n, Rng& rng) {
  FamilySpec{Family::ValueMaxCounter, eps, n}.validate();
  std::vector<double> u(n);
  u[0] = 1.0;
  std::set<double> seen;
  for (std::size_t i = 1; i < n; ++i) {
    double v;
    do {
      v = eps * (1.0 - uniform01(rng));  // (0, eps]
    } while (!seen.insert(v).second);
    u[i] = v;
  }
  std::vector<double> u_hat = u;
  u_hat[0] = 1.0 - eps;
  const double predicted_max = *std::max_element(u_hat.begin(), u_hat.end());
  return {Instance(std::move(u), std::move(u_hat)), predicted_max};
}

Instance generate(const FamilySpec& spec, Rng& rng) {
  switch (spec.family) {
    case Family::AlmostConstant: return gen_almost_constant(spec.epsilon, spec.n, rng);
    case Family::Uniform: return gen_uniform(spec.epsilon, spec.n, rng);
    case Family::Adversarial: return gen_adversarial(spec.epsilon, spec.n, rng);
    case Family::Unfair: return gen_unfair(spec.epsilon, spec.n, rng);
    case Family::LearnedDynkinCounter: return counterexample_learned_dynkin(spec.epsilon);
    case Family::ValueMaxCounter: return counterexample_value_max(spec.epsilon, spec.n, rng).first;
  }
  throw InvalidInput("unknown family");
}

}  // namespace secretary
