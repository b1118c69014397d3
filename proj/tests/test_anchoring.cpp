#include <doctest.h>

#include <cmath>

#include "forel/anchoring.hpp"
#include "forel/batch.hpp"
#include "helpers.hpp"

using namespace forel;
using forel::testing::biased_mp;
using forel::testing::biased_mp_nash;

TEST_CASE("anchor KL decomposition identity") {
  SUBCASE("collapses at a common policy") {
    GameTree g = biased_mp();
    Policy star = biased_mp_nash(g);
    AnchorDecomposition d = anchor_kl_decomposition(g, 1.0, star, star, star);
    for (Player i = 0; i < 2; ++i) {
      CHECK(std::abs(d.m[i]) <= 1e-14);
      CHECK(std::abs(d.delta[i]) <= 1e-14);
      CHECK(std::abs(d.kappa[i]) <= 1e-14);
    }
    CHECK(std::abs(d.identity_residual) <= 1e-14);
  }
  SUBCASE("holds for random interior triples on biased MP") {
    GameTree g = biased_mp();
    for (int trial = 0; trial < 200; ++trial) {
      AnchorDecomposition d = anchor_kl_decomposition(
          g, 0.25 + 0.05 * (trial % 20), random_interior_policy(g, 3 * trial),
          random_interior_policy(g, 3 * trial + 1), random_interior_policy(g, 3 * trial + 2));
      CHECK(std::abs(d.identity_residual) <= 1e-9);
    }
  }
  SUBCASE("holds for random interior triples on kuhn") {
    GameTree g = build_kuhn_poker();
    for (int trial = 0; trial < 20; ++trial) {
      AnchorDecomposition d = anchor_kl_decomposition(
          g, 0.5, random_interior_policy(g, 7000 + 3 * trial),
          random_interior_policy(g, 7001 + 3 * trial), random_interior_policy(g, 7002 + 3 * trial));
      CHECK(std::abs(d.identity_residual) <= 1e-8);
    }
  }
  SUBCASE("rejects non-interior inputs") {
    GameTree g = biased_mp();
    Policy bad = Policy::uniform(g);
    bad.probs[0][0] = {1.0, 0.0};
    CHECK_THROWS_AS(anchor_kl_decomposition(g, 1.0, bad, Policy::uniform(g), Policy::uniform(g)),
                    std::domain_error);
  }
}

TEST_CASE("solve_transformed") {
  GameTree g = biased_mp();
  Regularizer reg{RegularizerKind::entropy};
  SUBCASE("zero budget returns the mirror of zero scores") {
    SolveResult res = solve_transformed(g, 1.0, Policy::uniform(g), reg, 0.01, 0);
    CHECK(l1_distance(res.policy, Policy::uniform(g)) == 0.0);
  }
  SUBCASE("matches the QRE oracle at eta = 1") {
    SolveResult res = solve_transformed(g, 1.0, Policy::uniform(g), reg, 0.01, 100000);
    QreResult oracle = qre_fixed_point(g, 1.0, Policy::uniform(g));
    REQUIRE(oracle.converged);
    CHECK(l1_distance(res.policy, oracle.policy) <= 1e-4);
    CHECK(res.residual <= 1e-8);
  }
  SUBCASE("a dominant penalty pins the solution near the anchor") {
    SolveResult res = solve_transformed(g, 100.0, Policy::uniform(g), reg, 0.001, 20000);
    CHECK(l1_distance(res.policy, Policy::uniform(g)) < 0.05);
    QreResult oracle = qre_fixed_point(g, 100.0, Policy::uniform(g));
    CHECK(l1_distance(res.policy, oracle.policy) <= 1e-4);
  }
}

TEST_CASE("iterate_anchors on matching pennies collapses immediately") {
  GameTree g = build_matrix_game({{1, -1}, {-1, 1}});
  Policy star = Policy::uniform(g);  // the unique Nash
  AnchorSchedule schedule;
  schedule.steps_per_anchor = 4000;
  schedule.num_anchors = 4;
  AnchorOptions opts;
  opts.reference = star;
  auto records = iterate_anchors(g, 1.0, schedule, 0.05, opts);
  std::vector<Policy> seq;
  for (const auto& r : records) {
    CHECK(xi_divergence(g, star, r.policy) <= 1e-6);
    seq.push_back(r.policy);
  }
  for (double margin : kl_contraction_check(g, star, seq)) CHECK(margin <= 1e-9);
}

TEST_CASE("iterate_anchors drives biased MP toward its Nash") {
  GameTree g = biased_mp();
  Policy star = biased_mp_nash(g);
  AnchorSchedule schedule;
  schedule.steps_per_anchor = 4000;
  schedule.num_anchors = 8;
  AnchorOptions opts;
  opts.reference = star;
  auto records = iterate_anchors(g, 1.0, schedule, 0.05, opts);

  std::vector<Policy> seq;
  double prev_xi = xi_divergence(g, star, Policy::uniform(g));
  for (const auto& r : records) {
    REQUIRE(r.decomposition.has_value());
    CHECK(std::abs(r.decomposition->identity_residual) <= 1e-8);
    double xi = xi_divergence(g, star, r.policy);
    CHECK(xi <= prev_xi + 1e-3);
    prev_xi = xi;
    seq.push_back(r.policy);
  }
  CHECK(records.back().nashconv_base < 0.05);
  for (double margin : kl_contraction_check(g, star, seq)) CHECK(margin <= 1e-3);
}

TEST_CASE("interpolated schedule still converges") {
  GameTree g = biased_mp();
  AnchorSchedule schedule;
  schedule.steps_per_anchor = 4000;
  schedule.num_anchors = 8;
  schedule.interpolation = AnchorSchedule::Interpolation::linear_half;
  auto records = iterate_anchors(g, 1.0, schedule, 0.05);
  CHECK(records.back().nashconv_base < 0.05);
  CHECK(records.back().xi_step < 2e-3);
}

TEST_CASE("anchors csv shape") {
  GameTree g = biased_mp();
  AnchorSchedule schedule;
  schedule.steps_per_anchor = 100;
  schedule.num_anchors = 2;
  AnchorOptions opts;
  opts.reference = biased_mp_nash(g);
  auto records = iterate_anchors(g, 1.0, schedule, 0.05, opts);
  std::string csv = anchors_csv(records);
  CHECK(csv.find("k,nashconv_base,xi_to_ref,xi_step,sum_m,sum_delta,sum_kappa,identity_residual") !=
        std::string::npos);
  CHECK(std::count(csv.begin(), csv.end(), '\n') >= 8);
}
