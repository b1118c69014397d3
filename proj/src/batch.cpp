#include "forel/batch.hpp"

#include <cmath>

namespace forel {

namespace {

double anchor_identity_residual(const GameTree& game, double eta, const AnchorTriple& c) {
  return anchor_kl_decomposition(game, eta, c.star, c.prev, c.next).identity_residual;
}

double divergence_max(const GameTree& game, const Regularizer& reg, const Blocks& point,
                      double probe_eps) {
  DynamicsState state = initial_state(game, reg, ScoreMode::bounded_w);
  state.scores = point;
  // pin the anchor-action coordinate, as the bounded flow does
  for (auto& player : state.scores)
    for (auto& block : player) block[0] = 0.0;
  refresh_policy(game, reg, state);
  TransformSpec none;
  return divergence_check(game, none, reg, state, probe_eps).max_abs;
}

}  // namespace

std::vector<double> batch_nash_conv_serial(const GameTree& game,
                                           const std::vector<Policy>& policies) {
  std::vector<double> out(policies.size());
  for (size_t i = 0; i < policies.size(); ++i) out[i] = nash_conv(game, policies[i]);
  return out;
}

std::vector<double> batch_nash_conv_omp(const GameTree& game,
                                        const std::vector<Policy>& policies) {
  std::vector<double> out(policies.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(policies.size()); ++i)
    out[i] = nash_conv(game, policies[i]);
  return out;
}

std::vector<double> batch_anchor_identity_serial(const GameTree& game, double eta,
                                                  const std::vector<AnchorTriple>& cases) {
  std::vector<double> out(cases.size());
  for (size_t i = 0; i < cases.size(); ++i) out[i] = anchor_identity_residual(game, eta, cases[i]);
  return out;
}

std::vector<double> batch_anchor_identity_omp(const GameTree& game, double eta,
                                               const std::vector<AnchorTriple>& cases) {
  std::vector<double> out(cases.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(cases.size()); ++i)
    out[i] = anchor_identity_residual(game, eta, cases[i]);
  return out;
}

std::vector<double> batch_monotonicity_sum_serial(
    const GameTree& game, const std::vector<std::pair<Policy, Policy>>& pairs,
    const RewardFunction& reward) {
  std::vector<double> out(pairs.size());
  for (size_t i = 0; i < pairs.size(); ++i)
    out[i] = monotonicity_gap(game, pairs[i].first, pairs[i].second, reward).sum;
  return out;
}

std::vector<double> batch_monotonicity_sum_omp(const GameTree& game,
                                               const std::vector<std::pair<Policy, Policy>>& pairs,
                                               const RewardFunction& reward) {
  std::vector<double> out(pairs.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(pairs.size()); ++i)
    out[i] = monotonicity_gap(game, pairs[i].first, pairs[i].second, reward).sum;
  return out;
}

std::vector<double> batch_divergence_max_serial(const GameTree& game, const Regularizer& reg,
                                                const std::vector<Blocks>& points,
                                                double probe_eps) {
  std::vector<double> out(points.size());
  for (size_t i = 0; i < points.size(); ++i) out[i] = divergence_max(game, reg, points[i], probe_eps);
  return out;
}

std::vector<double> batch_divergence_max_omp(const GameTree& game, const Regularizer& reg,
                                             const std::vector<Blocks>& points, double probe_eps) {
  std::vector<double> out(points.size());
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(points.size()); ++i)
    out[i] = divergence_max(game, reg, points[i], probe_eps);
  return out;
}

namespace {

// splitmix64; deterministic across platforms
std::uint64_t mix(std::uint64_t& s) {
  s += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform01(std::uint64_t& s) {
  return (mix(s) >> 11) * 0x1.0p-53;
}

}  // namespace

Policy random_interior_policy(const GameTree& game, std::uint64_t seed, double concentration) {
  std::uint64_t s = seed * 0x853c49e6748fea9bull + 0xda3e39cb94b95bdbull;
  Policy pi = Policy::zeros_like(game);
  for (auto& player : pi.probs) {
    for (auto& block : player) {
      double sum = 0.0;
      for (double& v : block) {
        // exponential spacing gives a Dirichlet(1)-style draw; concentration
        // sharpens (<1) or flattens (>1) it
        double u = uniform01(s);
        v = std::pow(-std::log(1.0 - u), 1.0 / concentration);
        sum += v;
      }
      for (double& v : block) v /= sum;
    }
  }
  return pi.floored(1e-6);
}

Blocks random_blocks(const GameTree& game, std::uint64_t seed, double scale) {
  std::uint64_t s = seed * 0x9e3779b97f4a7c15ull + 1;
  Blocks b = blocks_like(game);
  for (auto& player : b)
    for (auto& block : player)
      for (double& v : block) v = scale * (2.0 * uniform01(s) - 1.0);
  return b;
}

}  // namespace forel
