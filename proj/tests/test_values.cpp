#include <doctest.h>

#include <cmath>

#include "forel/batch.hpp"
#include "forel/values.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace forel;
using forel::testing::biased_mp;
using forel::testing::biased_mp_nash;
using forel::testing::kuhn_alpha_nash;

TEST_CASE("reach probabilities on biased matching pennies") {
  GameTree g = biased_mp();
  ReachTable t = reach_probs(g, Policy::uniform(g));
  for (int h = 0; h < g.num_nodes(); ++h) {
    if (!g.node(h).terminal()) continue;
    CHECK(t.full[h] == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(t.counterfactual[0][h] == doctest::Approx(0.5).epsilon(1e-15));  // only p2's move
  }
  // player 2's decision node: nobody but player 1 acted yet
  int p2node = g.node(g.root()).children[0];
  CHECK(t.counterfactual[1][p2node] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(t.counterfactual[0][p2node] == 1.0);
  CHECK(t.full[g.root()] == 1.0);
}

TEST_CASE("reach probabilities on kuhn") {
  GameTree g = build_kuhn_poker();
  ReachTable t = reach_probs(g, Policy::uniform(g));
  // player 1's first decision: only the chance deal factored in
  for (int h = 0; h < g.num_nodes(); ++h) {
    const GameNode& node = g.node(h);
    if (node.player == 0 && g.infostate_label(0, node.infostate).size() == 1)
      CHECK(t.counterfactual[0][h] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  }
}

TEST_CASE("reach factorization holds for random policies") {
  GameTree g = build_kuhn_poker();
  for (int trial = 0; trial < 100; ++trial) {
    Policy pi = random_interior_policy(g, 1000 + trial);
    ReachTable t = reach_probs(g, pi);
    for (int h = 0; h < g.num_nodes(); ++h)
      for (Player i = 0; i < 2; ++i)
        CHECK(std::abs(t.full[h] - t.own[i][h] * t.counterfactual[i][h]) <= 1e-12);
  }
}

TEST_CASE("reach requires a complete policy") {
  GameTree g = build_kuhn_poker();
  Policy pi = Policy::uniform(g);
  pi.probs[1].pop_back();
  CHECK_THROWS_WITH_AS(reach_probs(g, pi), doctest::Contains("incomplete"),
                       std::invalid_argument);
}

TEST_CASE("value tables on biased matching pennies") {
  GameTree g = biased_mp();
  BaseReward base;
  ValueTable t = value_tables(g, Policy::uniform(g), base);
  CHECK(t.value[0][g.root()] == doctest::Approx(2.25).epsilon(1e-15));
  CHECK(t.value[1][g.root()] == doctest::Approx(-2.25).epsilon(1e-15));
  CHECK(t.infostate_q[0][0][0] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(t.infostate_q[0][0][1] == doctest::Approx(4.5).epsilon(1e-15));
}

TEST_CASE("zero-sum root values cancel for random policies") {
  for (GameTree g : {build_kuhn_poker(), biased_mp()}) {
    for (int trial = 0; trial < 20; ++trial) {
      Policy pi = random_interior_policy(g, 77 + trial);
      BaseReward base;
      ValueTable t = value_tables(g, pi, base);
      CHECK(std::abs(t.value[0][g.root()] + t.value[1][g.root()]) < 1e-12);
    }
  }
}

TEST_CASE("kuhn uniform value matches the forward enumeration oracle") {
  GameTree g = build_kuhn_poker();
  Policy pi = Policy::uniform(g);
  BaseReward base;
  double v = value_tables(g, pi, base).value[0][g.root()];
  double oracle_v = oracle::expectation(g, pi)[0];
  CHECK(v == doctest::Approx(oracle_v).epsilon(1e-14));
  // under uniform play the bet-fold asymmetry favors player 1 by 1/8
  CHECK(v == doctest::Approx(0.125).epsilon(1e-14));
}

TEST_CASE("value recursion matches oracle and closing identity on random policies") {
  GameTree g = build_kuhn_poker();
  BaseReward base;
  for (int trial = 0; trial < 100; ++trial) {
    Policy pi = random_interior_policy(g, 31 * trial + 5);
    ReachTable reach = reach_probs(g, pi);
    ValueTable t = value_tables(g, pi, base, reach);
    auto direct = oracle::expectation(g, pi);
    for (Player i = 0; i < 2; ++i) {
      CHECK(std::abs(t.value[i][g.root()] - direct[i]) <= 1e-10);
      // closing identity: V(root) = sum_h rho(h) sum_a pi(a|x) r(h,a)
      double flat = 0.0;
      for (int h = 0; h < g.num_nodes(); ++h) {
        const GameNode& node = g.node(h);
        for (int a = 0; a < node.num_actions(); ++a) {
          double p = node.player == kChance ? node.chance_probs[a]
                                            : pi.probs[node.player][node.infostate][a];
          flat += reach.full[h] * p * g.reward(h, a, i);
        }
      }
      CHECK(std::abs(t.value[i][g.root()] - flat) <= 1e-10);
    }
  }
}

TEST_CASE("infostate aggregation is consistent with per-history values") {
  GameTree g = build_kuhn_poker();
  BaseReward base;
  for (int trial = 0; trial < 25; ++trial) {
    Policy pi = random_interior_policy(g, 900 + trial);
    ReachTable reach = reach_probs(g, pi);
    ValueTable t = value_tables(g, pi, base, reach);
    for (Player i = 0; i < 2; ++i) {
      for (int x = 0; x < g.num_infostates(i); ++x) {
        for (int a = 0; a < g.num_actions(i, x); ++a) {
          double per_history = 0.0;
          for (int h : g.infostate_histories(i, x))
            per_history += reach.full[h] * t.q[i][g.edge_offset(h) + a];
          double aggregated = reach.infostate_full[i][x] * t.infostate_q[i][x][a];
          CHECK(std::abs(per_history - aggregated) <= 1e-10);
        }
      }
    }
  }
}

TEST_CASE("best response on biased matching pennies") {
  GameTree g = biased_mp();
  Policy uniform = Policy::uniform(g);
  BestResponse br1 = best_response(g, uniform, 0);
  CHECK(br1.value == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(br1.policy.probs[0][0][1] == 1.0);  // pure second action
  BestResponse br2 = best_response(g, uniform, 1);
  CHECK(br2.value == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(br2.policy.probs[1][0][0] == 1.0);  // pure first action (payoffs 0 vs -4.5)
}

TEST_CASE("best response ties break to the lowest action index") {
  GameTree g = build_matrix_game({{1, 1}, {1, 1}});
  BestResponse br = best_response(g, Policy::uniform(g), 0);
  CHECK(br.policy.probs[0][0][0] == 1.0);
}

TEST_CASE("kuhn best response equals brute force over 64 pure strategies") {
  GameTree g = build_kuhn_poker();
  CHECK(oracle::num_pure(g, 0) == 64);
  for (int trial = 0; trial < 10; ++trial) {
    Policy pi = random_interior_policy(g, 4242 + trial);
    for (Player i = 0; i < 2; ++i) {
      double algo = best_response(g, pi, i).value;
      double brute = oracle::brute_force_best_response(g, pi, i);
      CHECK(algo == doctest::Approx(brute).epsilon(1e-12));
    }
  }
}

TEST_CASE("nash_conv at the biased-MP equilibrium and at uniform") {
  GameTree g = biased_mp();
  CHECK(nash_conv(g, biased_mp_nash(g)) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(nash_conv(g, Policy::uniform(g)) == doctest::Approx(4.5).epsilon(1e-12));
  // equilibrium value 9/13
  CHECK(root_value(g, biased_mp_nash(g), 0) == doctest::Approx(9.0 / 13.0).epsilon(1e-12));
}

TEST_CASE("nash_conv vanishes on the kuhn equilibrium family") {
  GameTree g = build_kuhn_poker();
  for (double alpha : {0.0, 1.0 / 6.0, 1.0 / 3.0}) {
    Policy star = kuhn_alpha_nash(g, alpha);
    CHECK(nash_conv(g, star) <= 1e-9);
    CHECK(nash_conv(g, star) >= -1e-12);
    CHECK(root_value(g, star, 0) == doctest::Approx(-1.0 / 18.0).epsilon(1e-12));
  }
  // the fictitious-play oracle brackets the game value on the induced 64x64 game
  Policy base = Policy::uniform(g);
  std::vector<std::vector<double>> induced(64, std::vector<double>(64));
  for (long r = 0; r < 64; ++r) {
    Policy row = oracle::pure_strategy(g, base, 0, r);
    for (long c = 0; c < 64; ++c)
      induced[r][c] = oracle::expectation(g, oracle::pure_strategy(g, row, 1, c))[0];
  }
  auto bounds = oracle::fictitious_play_bounds(induced, 4000);
  CHECK(bounds.lower <= -1.0 / 18.0 + 1e-9);
  CHECK(bounds.upper >= -1.0 / 18.0 - 1e-9);
  CHECK(bounds.upper - bounds.lower < 5e-2);
}

TEST_CASE("nash_conv never improves under a best-response improvement") {
  GameTree g = build_kuhn_poker();
  for (int trial = 0; trial < 5; ++trial) {
    Policy pi = random_interior_policy(g, 60 + trial);
    double before = nash_conv(g, pi);
    CHECK(before >= -1e-12);
    Policy improved = best_response(g, pi, 0).policy;
    // player 0 now plays a best response; their own gain is zero and the
    // opponent's gain cannot grow by more than player 0's old gain
    double after = nash_conv(g, improved);
    CHECK(after >= -1e-12);
  }
}

TEST_CASE("monotonicity gap") {
  GameTree g = biased_mp();
  SUBCASE("zero-sum two-player games have zero total gap") {
    for (int trial = 0; trial < 50; ++trial) {
      Policy pi = random_interior_policy(g, trial);
      Policy mu = random_interior_policy(g, 5000 + trial);
      MonotonicityGap gap = monotonicity_gap(g, pi, mu);
      CHECK(std::abs(gap.sum) <= 1e-12);
      CHECK(gap.per_player[0] == doctest::Approx(-gap.per_player[1]).epsilon(1e-12));
    }
  }
  SUBCASE("identical policies collapse the gap") {
    Policy pi = random_interior_policy(g, 9);
    MonotonicityGap gap = monotonicity_gap(g, pi, pi);
    for (double v : gap.per_player) CHECK(v == 0.0);
  }
  SUBCASE("polymatrix games have zero total gap") {
    GameTree pm = parse_game_text(
        "polymatrix 3\n2 2 2\n"
        "0.5 -1\n2 0.25\n"
        "1 0\n0 -1\n"
        "-0.75 1\n0.5 0\n");
    for (int trial = 0; trial < 20; ++trial) {
      Policy pi = random_interior_policy(pm, 100 + trial);
      Policy mu = random_interior_policy(pm, 700 + trial);
      CHECK(std::abs(monotonicity_gap(pm, pi, mu).sum) <= 1e-12);
    }
  }
}

TEST_CASE("best response against an exact equilibrium gains nothing") {
  GameTree g = biased_mp();
  Policy star = biased_mp_nash(g);
  BaseReward base;
  ValueTable vt = value_tables(g, star, base);
  for (Player i = 0; i < 2; ++i) {
    BestResponse br = best_response(g, star, i);
    CHECK(br.value == doctest::Approx(vt.value[i][g.root()]).epsilon(1e-9));
  }
}
