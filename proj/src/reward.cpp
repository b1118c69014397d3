#include "forel/reward.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace forel {

void TransformSpec::check(const GameTree& game) const {
  if (variant == TransformVariant::none) return;
  if (!(eta > 0.0)) throw std::invalid_argument("transform spec: eta must be positive");
  anchor.check_complete(game);
  // finite log-ratios are the binding requirement; anchors produced by the
  // iteration are floored at kLogFloor, which sits below the interior flag
  if (!anchor.interior(0.5 * kLogFloor))
    throw std::invalid_argument("transform spec: anchor policy is not interior");
  if (!(reach_floor > 0.0))
    throw std::invalid_argument("transform spec: reach floor must be positive");
}

TransformSpec TransformSpec::monotone_spec(const GameTree& game, double eta, Policy anchor,
                                           DenominatorMode mode) {
  TransformSpec s;
  s.variant = TransformVariant::monotone;
  s.eta = eta;
  s.anchor = std::move(anchor);
  s.denominator = mode;
  s.check(game);
  return s;
}

TransformSpec TransformSpec::zerosum_spec(const GameTree& game, double eta, Policy anchor) {
  TransformSpec s;
  s.variant = TransformVariant::zerosum;
  s.eta = eta;
  s.anchor = std::move(anchor);
  s.check(game);
  return s;
}

namespace {

double log_ratio(double p, double mu) {
  if (p < 0.0 || !std::isfinite(p))
    throw std::domain_error("transformed reward: invalid policy probability");
  return std::log(std::max(p, kLogFloor) / std::max(mu, kLogFloor));
}

}  // namespace

TransformedReward::TransformedReward(const GameTree& game, TransformSpec spec)
    : spec_(std::move(spec)) {
  spec_.check(game);
}

void TransformedReward::edge_rewards(const GameTree& game, const Policy& policy,
                                     const ReachTable& reach, int h, Action a,
                                     std::span<double> out) const {
  const GameNode& node = game.node(h);
  for (Player i = 0; i < game.num_players(); ++i) out[i] = game.reward(h, a, i);
  if (spec_.variant == TransformVariant::none || node.player == kChance) return;
  Player actor = node.player;
  double lr = log_ratio(policy.probs[actor][node.infostate][a],
                        spec_.anchor.probs[actor][node.infostate][a]);
  if (spec_.variant == TransformVariant::monotone) {
    double den = spec_.denominator == DenominatorMode::per_history
                     ? reach.counterfactual[actor][h]
                     : reach.infostate_cf[actor][node.infostate];
    out[actor] -= spec_.eta / std::max(den, spec_.reach_floor) * lr;
  } else {  // zerosum
    for (Player i = 0; i < game.num_players(); ++i)
      out[i] += (i == actor ? -1.0 : 1.0) * spec_.eta * lr;
  }
}

void BlendedReward::edge_rewards(const GameTree& game, const Policy& policy,
                                 const ReachTable& reach, int h, Action a,
                                 std::span<double> out) const {
  a_.edge_rewards(game, policy, reach, h, a, out);
  if (alpha_ == 0.0) return;
  std::vector<double> rb(out.size());
  b_.edge_rewards(game, policy, reach, h, a, rb);
  for (size_t i = 0; i < out.size(); ++i) out[i] = (1.0 - alpha_) * out[i] + alpha_ * rb[i];
}

double transformed_reward(const TransformSpec& spec, const GameTree& game, const Policy& policy,
                          int h, Action a, Player i) {
  TransformedReward fn(game, spec);
  ReachTable reach = reach_probs(game, policy);
  std::vector<double> out(game.num_players());
  fn.edge_rewards(game, policy, reach, h, a, out);
  return out[i];
}

std::vector<double> expected_penalty_decomposition(const TransformSpec& spec, const GameTree& game,
                                                   const Policy& policy, double tol) {
  if (spec.variant != TransformVariant::monotone)
    throw std::invalid_argument("expected_penalty_decomposition: monotone variant only");
  spec.check(game);
  policy.check_complete(game);

  ReachTable reach = reach_probs(game, policy);
  std::vector<double> t(game.num_players(), 0.0);
  for (Player i = 0; i < game.num_players(); ++i) {
    for (int x = 0; x < game.num_infostates(i); ++x) {
      double inner = 0.0;  // sum_a pi log(pi/mu) at x
      const auto& pi = policy.probs[i][x];
      const auto& mu = spec.anchor.probs[i][x];
      for (size_t a = 0; a < pi.size(); ++a) {
        if (pi[a] > 0.0) inner += pi[a] * log_ratio(pi[a], mu[a]);
      }
      if (spec.denominator == DenominatorMode::per_history) {
        for (int h : game.infostate_histories(i, x)) t[i] += reach.own[i][h] * inner;
      } else {
        t[i] += reach.infostate_own[i][x] * inner;
      }
    }
    t[i] *= spec.eta;
  }

  BaseReward base;
  TransformedReward transformed(game, spec);
  ValueTable vb = value_tables(game, policy, base, reach);
  ValueTable vt = value_tables(game, policy, transformed, reach);
  for (Player i = 0; i < game.num_players(); ++i) {
    double lhs = vt.value[i][game.root()];
    double rhs = vb.value[i][game.root()] - t[i];
    if (std::abs(lhs - rhs) > tol)
      throw std::runtime_error("expected penalty decomposition violated for player " +
                               std::to_string(i + 1) + ": transformed root value " +
                               std::to_string(lhs) + " vs base-minus-penalty " +
                               std::to_string(rhs));
  }
  return t;
}

}  // namespace forel
