#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "secretary/generators.hpp"
#include "secretary/multi_select.hpp"

using namespace secretary;

namespace {

Instance random_instance(Rng& rng, std::size_t n) {
  const double eps = uniform01(rng) * 0.95;
  switch (static_cast<int>(uniform01(rng) * 5)) {
    case 0: return gen_almost_constant(eps, n, rng);
    case 1: return gen_uniform(eps, n, rng);
    case 2: return gen_adversarial(eps, n, rng);
    case 3: return gen_unfair(eps, n, rng);
    default: {
      std::vector<double> u(n), p(n);
      for (std::size_t i = 0; i < n; ++i) {
        u[i] = std::exp(4 * uniform01(rng) - 2);
        p[i] = std::exp(4 * uniform01(rng) - 2);
      }
      return Instance(u, p);
    }
  }
}

std::set<Index> top_k(const Instance& inst, std::size_t k) {
  std::set<Index> s;
  for (std::size_t r = 1; r <= k; ++r) s.insert(inst.index_of_rank(r));
  return s;
}

std::set<Index> as_set(const SetSelection& sel) {
  return {sel.accepted_indices.begin(), sel.accepted_indices.end()};
}

}  // namespace

TEST_CASE("k-pegging with k = 1 mirrors the single-choice pegged trace") {
  const Instance inst = make_instance({5, 5.5}, {6, 5.4});
  const auto sel = k_pegging_run(inst, 1, Schedule({0.2, 0.7}), {true});
  REQUIRE(sel.size() == 1);
  CHECK(sel.accepted_indices[0] == 1);
  CHECK(sel.per_index_rule[0] == SetRule::Case1);
}

TEST_CASE("k-pegging with exact predictions returns the top k for every order and split") {
  Rng rng(1);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
      std::vector<double> u(n);
      for (auto& v : u) v = 0.1 + uniform01(rng);
      const Instance inst(u, u);
      const auto expected = top_k(inst, k);
      std::vector<Index> perm(n);
      std::iota(perm.begin(), perm.end(), Index{0});
      do {
        // The first `early` arrivals land before 1/2.
        for (std::size_t early = 0; early <= n; ++early) {
          std::vector<double> times(n);
          for (std::size_t pos = 0; pos < n; ++pos) {
            times[perm[pos]] = pos < early ? 0.5 * (pos + 1.0) / (early + 1.0)
                                           : 0.5 + 0.5 * (pos - early + 1.0) / (n - early + 1.0);
          }
          const auto sel = k_pegging_run(inst, k, Schedule(times), {true});
          CHECK(as_set(sel) == expected);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST_CASE("k-pegging with exact but tied predictions picks the lowest indices") {
  Rng rng(2);
  const Instance flat = gen_almost_constant(0.0, 12, rng);
  for (int rep = 0; rep < 200; ++rep) {
    const auto sel = k_pegging_run(flat, 4, sample_schedule(12, rng), {true});
    CHECK(as_set(sel) == std::set<Index>{0, 1, 2, 3});
  }
}

TEST_CASE("k-pegging: smoothness, capacity and bookkeeping on random trials") {
  Rng rng(3);
  std::size_t violations = 0;
  for (int rep = 0; rep < 20000; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(rng) * 40);
    const std::size_t k = 1 + static_cast<std::size_t>(uniform01(rng) * std::min<double>(n, 10));
    const Instance inst = random_instance(rng, n);
    const Schedule sched = sample_schedule(n, rng);
    const auto sel = k_pegging_run(inst, k, sched, {true});
    CHECK(sel.size() <= k);
    CHECK(as_set(sel).size() == sel.size());
    CHECK(sel.per_index_rule.size() == sel.size());
    const double bound =
        inst.top_sum(k) - 4.0 * k * prediction_error(inst, ErrorAlgebra::additive());
    violations += sel.total_value(inst) < bound - 1e-9 * inst.top_sum(k);
  }
  CHECK(violations == 0);
}

TEST_CASE("k-pegging with k = 1 meets the single-choice bound") {
  Rng rng(4);
  for (int rep = 0; rep < 5000; ++rep) {
    const std::size_t n = 2 + static_cast<std::size_t>(uniform01(rng) * 20);
    const Instance inst = random_instance(rng, n);
    const auto sel = k_pegging_run(inst, 1, sample_schedule(n, rng), {true});
    REQUIRE(sel.size() == 1);
    const double best = inst.true_value(inst.best_true());
    CHECK(sel.total_value(inst) >=
          best - 4 * prediction_error(inst, ErrorAlgebra::additive()) - 1e-9 * best);
  }
}

TEST_CASE("k-pegging reports original indices") {
  // Predictions are in increasing order, so internal labels reverse the input.
  const Instance inst = make_instance({1, 2, 3}, {1, 2, 3});
  const auto sel = k_pegging_run(inst, 1, Schedule({0.6, 0.7, 0.8}));
  REQUIRE(sel.size() == 1);
  CHECK(sel.accepted_indices[0] == 2);
}

TEST_CASE("k parameter validation") {
  const Instance inst = make_instance({1, 2, 3}, {1, 2, 3});
  const Schedule sched({0.1, 0.2, 0.3});
  CHECK_THROWS_AS(k_pegging_run(inst, 0, sched), InvalidInput);
  CHECK_THROWS_AS(k_pegging_run(inst, 4, sched), InvalidInput);
  CHECK_THROWS_AS(fair_half_run(inst, 0, sched), InvalidInput);
  CHECK_THROWS_AS(fair_half_run(inst, 4, sched), InvalidInput);
}

TEST_CASE("fair-half") {
  const Instance inst = make_instance({4, 1, 3, 2}, {1, 1, 1, 1});
  CHECK(fair_half_run(inst, 2, Schedule({0.1, 0.2, 0.3, 0.4})).size() == 0);

  // k = n: every late arrival is taken.
  const auto all = fair_half_run(inst, 4, Schedule({0.1, 0.6, 0.7, 0.2}));
  CHECK(as_set(all) == std::set<Index>{1, 2});

  // k = 2: 4 and 3 seen early; 2 is not among the two best so far.
  CHECK(fair_half_run(inst, 2, Schedule({0.1, 0.7, 0.2, 0.6})).size() == 0);

  // Capacity: once full, later records are refused.
  const auto full = fair_half_run(inst, 1, Schedule({0.9, 0.1, 0.8, 0.7}));
  REQUIRE(full.size() == 1);
  CHECK(full.accepted_indices[0] == 3);
}

TEST_CASE("fair-half per-rank frequency is near or above 1/4") {
  Rng rng(5);
  const std::size_t n = 40, k = 5, trials = 4000;
  std::vector<std::size_t> hits(k, 0);
  for (std::size_t t = 0; t < trials; ++t) {
    const Instance inst = gen_uniform(0.2, n, rng);
    const auto sel = fair_half_run(inst, k, sample_schedule(n, rng));
    for (std::size_t r = 0; r < k; ++r) hits[r] += sel.contains(inst.index_of_rank(r + 1));
  }
  // 3σ with σ ≤ 0.5/√trials.
  for (std::size_t r = 0; r < k; ++r) CHECK(hits[r] / double(trials) >= 0.25 - 0.024);
}
