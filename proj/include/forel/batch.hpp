#pragma once

#include <cstdint>
#include <vector>

#include "forel/anchoring.hpp"
#include "forel/diagnostics.hpp"
#include "forel/game.hpp"
#include "forel/values.hpp"

namespace forel {

// Bulk evaluation kernels. Each has a serial reference implementation and an
// OpenMP variant; results are elementwise independent, so the two must agree
// bit for bit (asserted in the tests, timed against each other in the bench
// target). The sequential dynamics themselves cannot be parallelized; these
// kernels cover the embarrassingly parallel bulk work around them: property
// sweeps over random policies, finite-difference probes, and config fan-out.

std::vector<double> batch_nash_conv_serial(const GameTree& game,
                                           const std::vector<Policy>& policies);
std::vector<double> batch_nash_conv_omp(const GameTree& game, const std::vector<Policy>& policies);

struct AnchorTriple {
  Policy star, prev, next;
};

std::vector<double> batch_anchor_identity_serial(const GameTree& game, double eta,
                                                  const std::vector<AnchorTriple>& cases);
std::vector<double> batch_anchor_identity_omp(const GameTree& game, double eta,
                                               const std::vector<AnchorTriple>& cases);

// Sum of per-player monotonicity gaps for each (pi, mu) pair.
std::vector<double> batch_monotonicity_sum_serial(const GameTree& game,
                                                  const std::vector<std::pair<Policy, Policy>>& pairs,
                                                  const RewardFunction& reward);
std::vector<double> batch_monotonicity_sum_omp(const GameTree& game,
                                               const std::vector<std::pair<Policy, Policy>>& pairs,
                                               const RewardFunction& reward);

// Divergence probes of the bounded field at many score points; returns the
// max |diagonal partial| per point.
std::vector<double> batch_divergence_max_serial(const GameTree& game, const Regularizer& reg,
                                                const std::vector<Blocks>& points,
                                                double probe_eps);
std::vector<double> batch_divergence_max_omp(const GameTree& game, const Regularizer& reg,
                                             const std::vector<Blocks>& points, double probe_eps);

// Deterministic interior policies for property sweeps (splitmix-based, no
// global RNG state).
Policy random_interior_policy(const GameTree& game, std::uint64_t seed, double concentration = 1.0);
Blocks random_blocks(const GameTree& game, std::uint64_t seed, double scale);

}  // namespace forel
