#pragma once

#include <span>
#include <vector>

#include "forel/game.hpp"
#include "forel/reward.hpp"
#include "forel/values.hpp"

namespace forel {

// Score-shaped data: one real per (player, infostate, action).
using Blocks = std::vector<std::vector<std::vector<double>>>;

Blocks blocks_like(const GameTree& game);
double blocks_l1_distance(const Blocks& a, const Blocks& b);

enum class RegularizerKind { entropy, l2 };

// Strictly convex simplex regularizer phi with mirror map
// Gamma(y) = argmax_p <y,p> - phi(p) and conjugate phi*(y) = max_p <y,p> - phi(p).
// entropy: phi = sum p log p, Gamma = softmax, phi* = logsumexp.
// l2:      phi = sum p^2,     Gamma = projection of y/2 onto the simplex.
struct Regularizer {
  RegularizerKind kind = RegularizerKind::entropy;

  void mirror(std::span<const double> y, std::span<double> p) const;
  double conjugate(std::span<const double> y) const;
  double potential(std::span<const double> p) const;
};

// Exact Euclidean projection onto the probability simplex (sorting algorithm).
void project_simplex(std::span<const double> v, std::span<double> out);

enum class ScoreMode { plain_y, bounded_w };

// In bounded_w mode the score of the first legal action of every infostate is
// pinned at zero and the field is differenced against it.
struct DynamicsState {
  Blocks scores;
  double time = 0.0;
  ScoreMode mode = ScoreMode::plain_y;
  Policy policy;  // mirror map of scores, refreshed after every step
};

DynamicsState initial_state(const GameTree& game, const Regularizer& reg,
                            ScoreMode mode = ScoreMode::plain_y);

// Scores whose mirror image is the given interior policy (log-probabilities
// under entropy, 2p under l2), so runs can start away from uniform.
DynamicsState state_from_policy(const GameTree& game, const Regularizer& reg, const Policy& start,
                                ScoreMode mode = ScoreMode::plain_y);

// Refreshes state.policy from state.scores (all blocks, or one player's).
void refresh_policy(const GameTree& game, const Regularizer& reg, DynamicsState& state);
void refresh_policy(const GameTree& game, const Regularizer& reg, DynamicsState& state, Player i);

// g^i(x,a) = rho^{pi^{-i}}(x) Q^i(x,a) under the given reward, which equals
// the counterfactual-weighted sum over h in x of Q^i(h,a). bounded_w mode
// returns the field differenced against each infostate's first action.
Blocks vector_field(const GameTree& game, const RewardFunction& reward,
                    const DynamicsState& state);
Blocks vector_field(const GameTree& game, const TransformSpec& spec, const DynamicsState& state);

// One simultaneous explicit Euler step: scores += dt * field for everyone at
// once, then the policies are refreshed. Throws on non-finite field entries,
// naming the offending (player, infostate, action).
DynamicsState euler_step(const GameTree& game, const TransformSpec& spec,
                         const Regularizer& reg, const DynamicsState& state, double dt);

// Time stepping used by the run loops. `simultaneous` is the plain explicit
// Euler step above. `alternating` sweeps the players one at a time (each seeing
// the predecessors' refreshed policies) and reverses the sweep order on every
// other step; the symmetrized sweep removes the secular drift that the
// simultaneous step injects into conserved quantities of recurrent flows.
enum class StepScheme { simultaneous, alternating };

void advance(const GameTree& game, const RewardFunction& reward, const Regularizer& reg,
             DynamicsState& state, double dt, StepScheme scheme, long step_index);

struct DivergenceCheck {
  Blocks diagonal;   // d field(i,x,a) / d w^i(x,a), central differences
  double trace = 0.0;
  double max_abs = 0.0;
};

// Numerical check that the bounded-score field is divergence-free. Requires
// bounded_w mode and a policy-independent reward (variant none).
DivergenceCheck divergence_check(const GameTree& game, const TransformSpec& spec,
                                 const Regularizer& reg, const DynamicsState& state,
                                 double probe_eps);

// Runs plain_y and bounded_w from matched initial conditions and returns the
// maximum L1 policy discrepancy over the sampled steps.
double equivalence_check(const GameTree& game, const Regularizer& reg, double dt, long steps,
                         StepScheme scheme = StepScheme::alternating, int stride = 10);

}  // namespace forel
