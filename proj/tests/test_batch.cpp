#include <doctest.h>

#include <algorithm>

#include "forel/batch.hpp"
#include "helpers.hpp"

using namespace forel;
using forel::testing::biased_mp;

TEST_CASE("omp kernels agree bitwise with their serial references") {
  GameTree g = build_kuhn_poker();
  Regularizer reg{RegularizerKind::entropy};

  SUBCASE("nash conv") {
    std::vector<Policy> policies;
    for (int i = 0; i < 24; ++i) policies.push_back(random_interior_policy(g, 100 + i));
    CHECK(batch_nash_conv_serial(g, policies) == batch_nash_conv_omp(g, policies));
  }
  SUBCASE("anchor identity residuals") {
    std::vector<AnchorTriple> cases;
    for (int i = 0; i < 12; ++i)
      cases.push_back({random_interior_policy(g, 3 * i), random_interior_policy(g, 3 * i + 1),
                       random_interior_policy(g, 3 * i + 2)});
    CHECK(batch_anchor_identity_serial(g, 0.5, cases) == batch_anchor_identity_omp(g, 0.5, cases));
  }
  SUBCASE("monotonicity sums") {
    BaseReward base;
    std::vector<std::pair<Policy, Policy>> pairs;
    for (int i = 0; i < 16; ++i)
      pairs.emplace_back(random_interior_policy(g, i), random_interior_policy(g, 1000 + i));
    CHECK(batch_monotonicity_sum_serial(g, pairs, base) ==
          batch_monotonicity_sum_omp(g, pairs, base));
  }
  SUBCASE("divergence probes") {
    std::vector<Blocks> points;
    for (int i = 0; i < 8; ++i) points.push_back(random_blocks(g, 50 + i, 1.0));
    CHECK(batch_divergence_max_serial(g, reg, points, 1e-5) ==
          batch_divergence_max_omp(g, reg, points, 1e-5));
  }
}

TEST_CASE("random interior policies are deterministic and interior") {
  GameTree g = build_kuhn_poker();
  Policy a = random_interior_policy(g, 42);
  Policy b = random_interior_policy(g, 42);
  Policy c = random_interior_policy(g, 43);
  CHECK(l1_distance(a, b) == 0.0);
  CHECK(l1_distance(a, c) > 0.0);
  CHECK(a.interior(1e-7));
  for (const auto& player : a.probs)
    for (const auto& block : player) {
      double sum = 0.0;
      for (double v : block) sum += v;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    }
}
