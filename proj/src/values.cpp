#include "forel/values.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace forel {

ReachTable reach_probs(const GameTree& game, const Policy& policy) {
  policy.check_complete(game);
  int n = game.num_nodes();
  int players = game.num_players();
  ReachTable t;
  t.full.assign(n, 1.0);
  t.own.assign(players, std::vector<double>(n, 1.0));
  t.counterfactual.assign(players, std::vector<double>(n, 1.0));
  for (int h = 0; h < n; ++h) {
    const GameNode& node = game.node(h);
    if (node.terminal()) continue;
    for (int a = 0; a < node.num_actions(); ++a) {
      int c = node.children[a];
      double p = node.player == kChance ? node.chance_probs[a]
                                        : policy.probs[node.player][node.infostate][a];
      t.full[c] = t.full[h] * p;
      for (Player i = 0; i < players; ++i) {
        t.own[i][c] = t.own[i][h] * (node.player == i ? p : 1.0);
        t.counterfactual[i][c] = t.counterfactual[i][h] * (node.player == i ? 1.0 : p);
      }
    }
  }
  t.infostate_full.assign(players, {});
  t.infostate_cf.assign(players, {});
  t.infostate_own.assign(players, {});
  for (Player p = 0; p < players; ++p) {
    int nx = game.num_infostates(p);
    t.infostate_full[p].assign(nx, 0.0);
    t.infostate_cf[p].assign(nx, 0.0);
    t.infostate_own[p].assign(nx, 0.0);
    for (int x = 0; x < nx; ++x) {
      const auto& hs = game.infostate_histories(p, x);
      for (int h : hs) {
        t.infostate_full[p][x] += t.full[h];
        t.infostate_cf[p][x] += t.counterfactual[p][h];
      }
      // under perfect recall the own reach is shared by all h in x
      t.infostate_own[p][x] = t.own[p][hs.front()];
    }
  }
  return t;
}

ValueTable value_tables(const GameTree& game, const Policy& policy,
                        const RewardFunction& reward) {
  return value_tables(game, policy, reward, reach_probs(game, policy));
}

ValueTable value_tables(const GameTree& game, const Policy& policy, const RewardFunction& reward,
                        const ReachTable& reach) {
  policy.check_complete(game);
  int n = game.num_nodes();
  int players = game.num_players();
  ValueTable t;
  t.value.assign(players, std::vector<double>(n, 0.0));
  t.q.assign(players, std::vector<double>(game.num_edges(), 0.0));
  std::vector<double> r(players);
  for (int h = n - 1; h >= 0; --h) {
    const GameNode& node = game.node(h);
    if (node.terminal()) continue;
    int base = game.edge_offset(h);
    for (int a = 0; a < node.num_actions(); ++a) {
      int c = node.children[a];
      reward.edge_rewards(game, policy, reach, h, a, r);
      double p = node.player == kChance ? node.chance_probs[a]
                                        : policy.probs[node.player][node.infostate][a];
      for (Player i = 0; i < players; ++i) {
        double q = r[i] + t.value[i][c];
        if (!std::isfinite(q))
          throw std::runtime_error("non-finite reward/value at history " + std::to_string(h) +
                                   " action " + std::to_string(a));
        t.q[i][base + a] = q;
        t.value[i][h] += p * q;
      }
    }
  }
  t.infostate_value.assign(players, {});
  t.infostate_q.assign(players, {});
  for (Player p = 0; p < players; ++p) {
    int nx = game.num_infostates(p);
    t.infostate_value[p].assign(nx, 0.0);
    t.infostate_q[p].resize(nx);
    for (int x = 0; x < nx; ++x) {
      const auto& hs = game.infostate_histories(p, x);
      int na = game.num_actions(p, x);
      t.infostate_q[p][x].assign(na, 0.0);
      double w = reach.infostate_cf[p][x];
      if (w > 0.0) {
        for (int h : hs) {
          double wh = reach.counterfactual[p][h];
          t.infostate_value[p][x] += wh * t.value[p][h];
          for (int a = 0; a < na; ++a)
            t.infostate_q[p][x][a] += wh * t.q[p][game.edge_offset(h) + a];
        }
        t.infostate_value[p][x] /= w;
        for (int a = 0; a < na; ++a) t.infostate_q[p][x][a] /= w;
      } else {
        // opponents never reach x: fall back to the unweighted average
        for (int h : hs) {
          t.infostate_value[p][x] += t.value[p][h] / hs.size();
          for (int a = 0; a < na; ++a)
            t.infostate_q[p][x][a] += t.q[p][game.edge_offset(h) + a] / hs.size();
        }
      }
    }
  }
  return t;
}

double root_value(const GameTree& game, const Policy& policy, Player i) {
  BaseReward base;
  return value_tables(game, policy, base).value[i][game.root()];
}

namespace {

// Lazy best-response evaluator: the best action of an infostate aggregates
// counterfactually-weighted continuation values, which in turn may resolve
// deeper infostates of the same player. Perfect recall keeps this acyclic.
struct BrSolver {
  const GameTree& game;
  const Policy& policy;
  Player me;
  const ReachTable reach;
  std::vector<int> chosen;          // per infostate, -1 until resolved
  std::vector<double> value_memo;   // per history, NaN until resolved

  BrSolver(const GameTree& g, const Policy& pi, Player i)
      : game(g), policy(pi), me(i), reach(reach_probs(g, pi)) {
    chosen.assign(game.num_infostates(me), -1);
    value_memo.assign(game.num_nodes(), std::nan(""));
  }

  double value(int h) {
    if (!std::isnan(value_memo[h])) return value_memo[h];
    const GameNode& node = game.node(h);
    double v = 0.0;
    if (node.terminal()) {
      v = 0.0;
    } else if (node.player == me) {
      Action a = action(node.infostate);
      v = game.reward(h, a, me) + value(node.children[a]);
    } else {
      for (int a = 0; a < node.num_actions(); ++a) {
        double p = node.player == kChance ? node.chance_probs[a]
                                          : policy.probs[node.player][node.infostate][a];
        v += p * (game.reward(h, a, me) + value(node.children[a]));
      }
    }
    value_memo[h] = v;
    return v;
  }

  Action action(int x) {
    if (chosen[x] >= 0) return chosen[x];
    int na = game.num_actions(me, x);
    std::vector<double> q(na, 0.0);
    for (int h : game.infostate_histories(me, x)) {
      double w = reach.counterfactual[me][h];
      for (int a = 0; a < na; ++a)
        q[a] += w * (game.reward(h, a, me) + value(game.node(h).children[a]));
    }
    Action best = 0;
    for (int a = 1; a < na; ++a)
      if (q[a] > q[best]) best = a;
    chosen[x] = best;
    return best;
  }
};

}  // namespace

BestResponse best_response(const GameTree& game, const Policy& policy, Player i) {
  BrSolver solver(game, policy, i);
  for (int x = 0; x < game.num_infostates(i); ++x) solver.action(x);
  BestResponse br;
  br.policy = policy;
  for (int x = 0; x < game.num_infostates(i); ++x) {
    auto& block = br.policy.probs[i][x];
    std::fill(block.begin(), block.end(), 0.0);
    block[solver.chosen[x]] = 1.0;
  }
  br.value = root_value(game, br.policy, i);
  return br;
}

double nash_conv(const GameTree& game, const Policy& policy) {
  BaseReward base;
  ValueTable vt = value_tables(game, policy, base);
  double total = 0.0;
  for (Player i = 0; i < game.num_players(); ++i) {
    BestResponse br = best_response(game, policy, i);
    total += br.value - vt.value[i][game.root()];
  }
  return total;
}

MonotonicityGap monotonicity_gap(const GameTree& game, const Policy& pi, const Policy& mu) {
  BaseReward base;
  return monotonicity_gap(game, pi, mu, base);
}

MonotonicityGap monotonicity_gap(const GameTree& game, const Policy& pi, const Policy& mu,
                                 const RewardFunction& reward) {
  int players = game.num_players();
  MonotonicityGap gap;
  gap.per_player.assign(players, 0.0);
  int root = game.root();
  auto v = [&](const Policy& p, Player i) { return value_tables(game, p, reward).value[i][root]; };
  for (Player i = 0; i < players; ++i) {
    Policy mu_i_pi = splice(pi, mu, i);   // (mu^i, pi^{-i})
    Policy pi_i_mu = splice(mu, pi, i);   // (pi^i, mu^{-i})
    gap.per_player[i] = v(pi, i) - v(mu_i_pi, i) - v(pi_i_mu, i) + v(mu, i);
    gap.sum += gap.per_player[i];
  }
  return gap;
}

}  // namespace forel
