#include "forel/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace forel {

Blocks blocks_like(const GameTree& game) {
  Blocks b(game.num_players());
  for (Player p = 0; p < game.num_players(); ++p) {
    b[p].resize(game.num_infostates(p));
    for (int x = 0; x < game.num_infostates(p); ++x) b[p][x].assign(game.num_actions(p, x), 0.0);
  }
  return b;
}

double blocks_l1_distance(const Blocks& a, const Blocks& b) {
  double d = 0.0;
  for (size_t p = 0; p < a.size(); ++p)
    for (size_t x = 0; x < a[p].size(); ++x)
      for (size_t i = 0; i < a[p][x].size(); ++i) d += std::abs(a[p][x][i] - b[p][x][i]);
  return d;
}

void project_simplex(std::span<const double> v, std::span<double> out) {
  // Find tau such that sum max(v - tau, 0) = 1, by sorting.
  std::vector<double> u(v.begin(), v.end());
  std::sort(u.begin(), u.end(), std::greater<>());
  double cumulative = 0.0;
  double tau = 0.0;
  for (size_t k = 0; k < u.size(); ++k) {
    cumulative += u[k];
    double candidate = (cumulative - 1.0) / static_cast<double>(k + 1);
    if (candidate < u[k]) tau = candidate;
  }
  for (size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - tau, 0.0);
}

void Regularizer::mirror(std::span<const double> y, std::span<double> p) const {
  if (kind == RegularizerKind::entropy) {
    double m = *std::max_element(y.begin(), y.end());
    double sum = 0.0;
    for (size_t i = 0; i < y.size(); ++i) {
      p[i] = std::exp(y[i] - m);
      sum += p[i];
    }
    for (size_t i = 0; i < y.size(); ++i) p[i] /= sum;
  } else {
    std::vector<double> half(y.size());
    for (size_t i = 0; i < y.size(); ++i) half[i] = 0.5 * y[i];
    project_simplex(half, p);
  }
}

double Regularizer::conjugate(std::span<const double> y) const {
  if (kind == RegularizerKind::entropy) {
    double m = *std::max_element(y.begin(), y.end());
    double sum = 0.0;
    for (double v : y) sum += std::exp(v - m);
    return m + std::log(sum);
  }
  std::vector<double> p(y.size());
  mirror(y, p);
  double dot = 0.0;
  for (size_t i = 0; i < y.size(); ++i) dot += p[i] * y[i];
  return dot - potential(p);
}

double Regularizer::potential(std::span<const double> p) const {
  double s = 0.0;
  if (kind == RegularizerKind::entropy) {
    for (double v : p)
      if (v > 0.0) s += v * std::log(v);
  } else {
    for (double v : p) s += v * v;
  }
  return s;
}

DynamicsState initial_state(const GameTree& game, const Regularizer& reg, ScoreMode mode) {
  DynamicsState s;
  s.scores = blocks_like(game);
  s.mode = mode;
  s.policy = Policy::zeros_like(game);
  refresh_policy(game, reg, s);
  return s;
}

DynamicsState state_from_policy(const GameTree& game, const Regularizer& reg,
                                const Policy& start, ScoreMode mode) {
  if (!start.interior(0.5 * kLogFloor))
    throw std::invalid_argument("state_from_policy: start policy must be interior");
  DynamicsState s = initial_state(game, reg, mode);
  for (Player p = 0; p < game.num_players(); ++p) {
    for (int x = 0; x < game.num_infostates(p); ++x) {
      auto& block = s.scores[p][x];
      for (size_t a = 0; a < block.size(); ++a) {
        double v = start.probs[p][x][a];
        block[a] = reg.kind == RegularizerKind::entropy ? std::log(v) : 2.0 * v;
      }
      if (mode == ScoreMode::bounded_w) {
        double shift = block[0];
        for (double& y : block) y -= shift;
      }
    }
  }
  refresh_policy(game, reg, s);
  return s;
}

void refresh_policy(const GameTree& game, const Regularizer& reg, DynamicsState& state) {
  for (Player p = 0; p < game.num_players(); ++p) refresh_policy(game, reg, state, p);
}

void refresh_policy(const GameTree& game, const Regularizer& reg, DynamicsState& state, Player i) {
  for (int x = 0; x < game.num_infostates(i); ++x)
    reg.mirror(state.scores[i][x], state.policy.probs[i][x]);
}

Blocks vector_field(const GameTree& game, const RewardFunction& reward,
                    const DynamicsState& state) {
  ReachTable reach = reach_probs(game, state.policy);
  ValueTable values = value_tables(game, state.policy, reward, reach);
  Blocks field = blocks_like(game);
  for (Player p = 0; p < game.num_players(); ++p) {
    for (int x = 0; x < game.num_infostates(p); ++x) {
      auto& fx = field[p][x];
      for (int h : game.infostate_histories(p, x)) {
        double w = reach.counterfactual[p][h];
        int base = game.edge_offset(h);
        for (size_t a = 0; a < fx.size(); ++a) fx[a] += w * values.q[p][base + a];
      }
      if (state.mode == ScoreMode::bounded_w) {
        double anchor = fx[0];
        for (double& f : fx) f -= anchor;
      }
    }
  }
  return field;
}

Blocks vector_field(const GameTree& game, const TransformSpec& spec, const DynamicsState& state) {
  if (spec.variant == TransformVariant::none) {
    BaseReward base;
    return vector_field(game, base, state);
  }
  TransformedReward reward(game, spec);
  return vector_field(game, reward, state);
}

namespace {

void add_scaled(const GameTree& game, DynamicsState& state, const Blocks& field, double dt,
                Player only_player) {
  for (Player p = 0; p < static_cast<int>(field.size()); ++p) {
    if (only_player >= 0 && p != only_player) continue;
    for (size_t x = 0; x < field[p].size(); ++x) {
      for (size_t a = 0; a < field[p][x].size(); ++a) {
        double g = field[p][x][a];
        state.scores[p][x][a] += dt * g;
        if (!std::isfinite(state.scores[p][x][a]))
          throw std::runtime_error("non-finite field entry at player " + std::to_string(p + 1) +
                                   " infostate " + std::to_string(x) + " (" +
                                   game.infostate_label(p, static_cast<int>(x)) + ") action " +
                                   std::to_string(a));
      }
    }
  }
}

}  // namespace

DynamicsState euler_step(const GameTree& game, const TransformSpec& spec, const Regularizer& reg,
                         const DynamicsState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("euler_step: dt must be positive");
  DynamicsState next = state;
  Blocks field = vector_field(game, spec, state);
  add_scaled(game, next, field, dt, -1);
  next.time += dt;
  refresh_policy(game, reg, next);
  return next;
}

void advance(const GameTree& game, const RewardFunction& reward, const Regularizer& reg,
             DynamicsState& state, double dt, StepScheme scheme, long step_index) {
  if (scheme == StepScheme::simultaneous) {
    Blocks field = vector_field(game, reward, state);
    add_scaled(game, state, field, dt, -1);
    refresh_policy(game, reg, state);
  } else {
    int n = game.num_players();
    bool forward = step_index % 2 == 0;
    for (int k = 0; k < n; ++k) {
      Player p = forward ? k : n - 1 - k;
      Blocks field = vector_field(game, reward, state);
      add_scaled(game, state, field, dt, p);
      refresh_policy(game, reg, state, p);
    }
  }
  state.time += dt;
}

DivergenceCheck divergence_check(const GameTree& game, const TransformSpec& spec,
                                 const Regularizer& reg, const DynamicsState& state,
                                 double probe_eps) {
  if (state.mode != ScoreMode::bounded_w)
    throw std::invalid_argument("divergence_check: bounded_w mode required");
  if (spec.variant != TransformVariant::none)
    throw std::invalid_argument(
        "divergence_check: requires a policy-independent reward (variant none)");
  if (!(probe_eps > 0.0)) throw std::invalid_argument("divergence_check: bad probe_eps");

  DivergenceCheck out;
  out.diagonal = blocks_like(game);
  BaseReward base;
  for (Player p = 0; p < game.num_players(); ++p) {
    for (int x = 0; x < game.num_infostates(p); ++x) {
      for (int a = 0; a < game.num_actions(p, x); ++a) {
        double partial = 0.0;
        double sign[2] = {+1.0, -1.0};
        double probes[2];
        for (int s = 0; s < 2; ++s) {
          DynamicsState probe = state;
          probe.scores[p][x][a] += sign[s] * probe_eps;
          refresh_policy(game, reg, probe, p);
          Blocks field = vector_field(game, base, probe);
          probes[s] = field[p][x][a];
        }
        partial = (probes[0] - probes[1]) / (2.0 * probe_eps);
        out.diagonal[p][x][a] = partial;
        out.trace += partial;
        out.max_abs = std::max(out.max_abs, std::abs(partial));
      }
    }
  }
  return out;
}

double equivalence_check(const GameTree& game, const Regularizer& reg, double dt, long steps,
                         StepScheme scheme, int stride) {
  BaseReward base;
  DynamicsState plain = initial_state(game, reg, ScoreMode::plain_y);
  DynamicsState bounded = initial_state(game, reg, ScoreMode::bounded_w);
  double worst = 0.0;
  for (long n = 0; n <= steps; ++n) {
    if (n % stride == 0) worst = std::max(worst, l1_distance(plain.policy, bounded.policy));
    if (n == steps) break;
    advance(game, base, reg, plain, dt, scheme, n);
    advance(game, base, reg, bounded, dt, scheme, n);
  }
  return worst;
}

}  // namespace forel
