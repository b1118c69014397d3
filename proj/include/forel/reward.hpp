#pragma once

#include <vector>

#include "forel/game.hpp"
#include "forel/values.hpp"

namespace forel {

enum class TransformVariant { none, monotone, zerosum };
enum class DenominatorMode { per_history, per_infostate };

// Policy-dependent reward shaping: a log-ratio penalty against an interior
// anchor policy. The monotone variant divides the acting player's penalty by
// the opponents' reach (so expected penalties depend only on the player's own
// policy and monotonicity is preserved); the zerosum variant instead credits
// the penalty to the other players, preserving the zero-sum property exactly.
struct TransformSpec {
  TransformVariant variant = TransformVariant::none;
  double eta = 0.0;
  Policy anchor;
  DenominatorMode denominator = DenominatorMode::per_infostate;
  double reach_floor = 1e-8;

  // Throws if eta or the anchor do not satisfy the variant's requirements.
  void check(const GameTree& game) const;

  static TransformSpec none_spec() { return {}; }
  static TransformSpec monotone_spec(const GameTree& game, double eta, Policy anchor,
                                     DenominatorMode mode = DenominatorMode::per_infostate);
  static TransformSpec zerosum_spec(const GameTree& game, double eta, Policy anchor);
};

// Probability floor applied before any log; keeps discretized dynamics finite.
inline constexpr double kLogFloor = 1e-12;

class TransformedReward final : public RewardFunction {
 public:
  TransformedReward(const GameTree& game, TransformSpec spec);

  void edge_rewards(const GameTree& game, const Policy& policy, const ReachTable& reach, int h,
                    Action a, std::span<double> out) const override;

  const TransformSpec& spec() const { return spec_; }
  void set_eta(double eta) { spec_.eta = eta; }

 private:
  TransformSpec spec_;
};

// Convex combination (1-alpha) * a + alpha * b of two reward functions; used
// for the interpolated anchor schedule.
class BlendedReward final : public RewardFunction {
 public:
  BlendedReward(const RewardFunction& a, const RewardFunction& b, double alpha)
      : a_(a), b_(b), alpha_(alpha) {}
  void set_alpha(double alpha) { alpha_ = alpha; }

  void edge_rewards(const GameTree& game, const Policy& policy, const ReachTable& reach, int h,
                    Action a, std::span<double> out) const override;

 private:
  const RewardFunction& a_;
  const RewardFunction& b_;
  double alpha_;
};

// Single-transition transformed reward for player i (convenience wrapper
// around the RewardFunction path).
double transformed_reward(const TransformSpec& spec, const GameTree& game, const Policy& policy,
                          int h, Action a, Player i);

// The monotone variant's expected penalty T^i depends only on player i's own
// policy: V^i_transformed(root) = V^i_base(root) - T^i. Returns the T^i and
// throws if the identity fails beyond `tol` (it is exact algebra whenever the
// reach floor never clamps).
std::vector<double> expected_penalty_decomposition(const TransformSpec& spec, const GameTree& game,
                                                   const Policy& policy, double tol = 1e-10);

}  // namespace forel
