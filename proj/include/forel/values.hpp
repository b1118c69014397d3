#pragma once

#include <span>
#include <vector>

#include "forel/game.hpp"

namespace forel {

// Reach probabilities for a fixed policy. `counterfactual[i][h]` is the
// product of everyone's action probabilities except player i's (chance
// included); full(h) = own[i][h] * counterfactual[i][h] for every i.
struct ReachTable {
  std::vector<double> full;                          // rho^pi(h)
  std::vector<std::vector<double>> own;              // [player] rho^{pi^i}(h)
  std::vector<std::vector<double>> counterfactual;   // [player] rho^{pi^{-i}}(h)
  // Per infostate of the acting player:
  std::vector<std::vector<double>> infostate_full;   // sum over h in x of full
  std::vector<std::vector<double>> infostate_cf;     // sum over h in x of counterfactual
  std::vector<std::vector<double>> infostate_own;    // common own reach (perfect recall)
};

// V and Q per history and per infostate for a fixed policy and reward.
// Infostate aggregation uses counterfactual weights; when an infostate is
// unreachable for the opponents the unweighted average is used instead (the
// value then never contributes to root values but stays finite).
struct ValueTable {
  std::vector<std::vector<double>> value;            // [player][h]   V^i(h)
  std::vector<std::vector<double>> q;                // [player][edge] Q^i(h,a)
  std::vector<std::vector<double>> infostate_value;  // [player][x]
  std::vector<std::vector<std::vector<double>>> infostate_q;  // [player][x][a]
};

// Evaluation contract for (possibly policy-dependent) rewards, so the base
// game and the transformed games share one value-computation path.
class RewardFunction {
 public:
  virtual ~RewardFunction() = default;
  // Fills one reward per player for the transition (h, a).
  virtual void edge_rewards(const GameTree& game, const Policy& policy, const ReachTable& reach,
                            int h, Action a, std::span<double> out) const = 0;
};

class BaseReward final : public RewardFunction {
 public:
  void edge_rewards(const GameTree& game, const Policy&, const ReachTable&, int h, Action a,
                    std::span<double> out) const override {
    for (Player i = 0; i < game.num_players(); ++i) out[i] = game.reward(h, a, i);
  }
};

ReachTable reach_probs(const GameTree& game, const Policy& policy);

ValueTable value_tables(const GameTree& game, const Policy& policy, const RewardFunction& reward);
ValueTable value_tables(const GameTree& game, const Policy& policy, const RewardFunction& reward,
                        const ReachTable& reach);

// Root value of player i under the base reward.
double root_value(const GameTree& game, const Policy& policy, Player i);

struct BestResponse {
  Policy policy;     // full profile: BR block for i, opponents unchanged
  double value;      // V^i at the root of (BR^i, pi^{-i})
};

// Counterfactual backward induction; ties break to the lowest action index.
BestResponse best_response(const GameTree& game, const Policy& policy, Player i);

// NashConv against the base reward: sum over players of the best-response
// gain. Zero exactly at a Nash equilibrium.
double nash_conv(const GameTree& game, const Policy& policy);

struct MonotonicityGap {
  std::vector<double> per_player;  // Omega^i(pi, mu)
  double sum = 0.0;
};

MonotonicityGap monotonicity_gap(const GameTree& game, const Policy& pi, const Policy& mu);
MonotonicityGap monotonicity_gap(const GameTree& game, const Policy& pi, const Policy& mu,
                                 const RewardFunction& reward);

}  // namespace forel
