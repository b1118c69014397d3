#include "forel/anchoring.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace forel {

AnchorDecomposition anchor_kl_decomposition(const GameTree& game, double eta, const Policy& star,
                                         const Policy& prev, const Policy& next) {
  if (!(eta > 0.0)) throw std::invalid_argument("anchor_kl_decomposition: eta must be positive");
  for (const Policy* p : {&star, &prev, &next}) {
    p->check_complete(game);
    if (!p->interior(0.5 * kLogFloor))
      throw std::domain_error("anchor_kl_decomposition: all policies must be interior");
  }
  int players = game.num_players();
  AnchorDecomposition d;
  d.m.assign(players, 0.0);
  d.delta.assign(players, 0.0);
  d.kappa.assign(players, 0.0);

  // KL side, through the xi_divergence code path.
  d.xi_star_new = xi_divergence(game, star, next);
  d.xi_star_prev = xi_divergence(game, star, prev);
  d.xi_step = xi_divergence(game, next, prev);

  // Value side, through the value-recursion code path.
  BaseReward base;
  int root = game.root();
  auto v = [&](const Policy& p, Player i) { return value_tables(game, p, base).value[i][root]; };
  for (Player i = 0; i < players; ++i) {
    Policy star_i_next = splice(next, star, i);  // (pi*^i, pi_k^{-i})
    Policy next_i_star = splice(star, next, i);  // (pi_k^i, pi*^{-i})
    double v_next = v(next, i);
    double v_star = v(star, i);
    double v_si = v(star_i_next, i);
    double v_is = v(next_i_star, i);
    d.m[i] = v_next - v_si - v_is + v_star;
    d.delta[i] = v_is - v_star;
  }

  // kappa: infostate Q of the transformed game (anchored at prev, per-history
  // denominators) evaluated at next.
  TransformSpec spec =
      TransformSpec::monotone_spec(game, eta, prev, DenominatorMode::per_history);
  TransformedReward reward(game, spec);
  ReachTable reach_next = reach_probs(game, next);
  ReachTable reach_star = reach_probs(game, star);
  ValueTable vt = value_tables(game, next, reward, reach_next);
  for (Player i = 0; i < players; ++i) {
    for (int x = 0; x < game.num_infostates(i); ++x) {
      double w = reach_star.infostate_own[i][x] * reach_next.infostate_cf[i][x];
      if (w == 0.0) continue;
      double inner = 0.0;
      for (int a = 0; a < game.num_actions(i, x); ++a)
        inner += (star.probs[i][x][a] - next.probs[i][x][a]) * vt.infostate_q[i][x][a];
      d.kappa[i] += w * inner;
    }
  }

  double lhs = d.xi_star_new - d.xi_star_prev;
  double sum = 0.0;
  for (Player i = 0; i < players; ++i) sum += d.m[i] + d.delta[i] + d.kappa[i];
  double rhs = -d.xi_step + sum / eta;
  d.identity_residual = lhs - rhs;
  return d;
}

SolveResult solve_transformed(const GameTree& game, double eta, const Policy& mu,
                              const Regularizer& reg, double dt, long budget,
                              DenominatorMode mode, StepScheme scheme) {
  TransformSpec spec = TransformSpec::monotone_spec(game, eta, mu, mode);
  DynamicsState state = initial_state(game, reg, ScoreMode::plain_y);
  SolveResult out;
  if (budget == 0) {
    out.policy = state.policy;
    return out;
  }
  TransformedReward reward(game, spec);
  long tail_start = budget - std::max<long>(1, budget / 100);
  Policy at_tail = state.policy;
  for (long n = 0; n < budget; ++n) {
    if (n == tail_start) at_tail = state.policy;
    advance(game, reward, reg, state, dt, scheme, n);
  }
  out.policy = state.policy;
  out.residual = l1_distance(out.policy, at_tail);
  return out;
}

std::vector<AnchorRecord> iterate_anchors(const GameTree& game, double eta,
                                          const AnchorSchedule& schedule, double dt,
                                          const AnchorOptions& opts) {
  if (schedule.steps_per_anchor < 1 || schedule.num_anchors < 1)
    throw std::invalid_argument("iterate_anchors: bad schedule");
  Policy prev_anchor = Policy::uniform(game);   // pi_{k-1}
  Policy older_anchor = prev_anchor;            // pi_{k-2}, for interpolation
  DynamicsState state = initial_state(game, opts.regularizer, ScoreMode::plain_y);

  std::vector<AnchorRecord> out;
  long global_step = 0;
  for (int k = 1; k <= schedule.num_anchors; ++k) {
    TransformSpec cur = TransformSpec::monotone_spec(game, eta, prev_anchor, opts.mode);
    TransformSpec old = TransformSpec::monotone_spec(game, eta, older_anchor, opts.mode);
    TransformedReward reward_cur(game, cur);
    TransformedReward reward_old(game, old);
    BlendedReward blended(reward_old, reward_cur, 1.0);

    long half = schedule.steps_per_anchor / 2;
    for (long n = 0; n < schedule.steps_per_anchor; ++n) {
      const RewardFunction* reward = &reward_cur;
      if (schedule.interpolation == AnchorSchedule::Interpolation::linear_half && n < half) {
        blended.set_alpha(half > 0 ? static_cast<double>(n) / half : 1.0);
        reward = &blended;
      }
      advance(game, *reward, opts.regularizer, state, dt, opts.scheme, global_step++);
    }

    AnchorRecord rec;
    rec.k = k;
    rec.policy = state.policy;
    rec.nashconv_base = nash_conv(game, state.policy);
    Policy snapshot = state.policy.floored(kLogFloor);
    rec.xi_step = xi_divergence(game, snapshot, prev_anchor);
    if (opts.reference)
      rec.decomposition = anchor_kl_decomposition(game, eta, *opts.reference, prev_anchor, snapshot);
    out.push_back(std::move(rec));

    older_anchor = prev_anchor;
    prev_anchor = snapshot;
    if (opts.reset_scores) state = initial_state(game, opts.regularizer, ScoreMode::plain_y);
  }
  return out;
}

std::vector<double> kl_contraction_check(const GameTree& game, const Policy& star,
                                         const std::vector<Policy>& sequence) {
  std::vector<double> margins;
  Policy prev = Policy::uniform(game);
  for (const Policy& pi : sequence) {
    double margin = xi_divergence(game, star, pi) - xi_divergence(game, star, prev) +
                    xi_divergence(game, pi, prev);
    margins.push_back(margin);
    prev = pi;
  }
  return margins;
}

std::string anchors_csv(const std::vector<AnchorRecord>& records) {
  std::string out;
  out += "# k: anchor index\n";
  out += "# nashconv_base: exploitability of pi_k against the base reward\n";
  out += "# xi_to_ref: Xi(reference, pi_k) when a reference was supplied, else nan\n";
  out += "# xi_step: Xi(pi_k, pi_{k-1})\n";
  out += "# sum_m,sum_delta,sum_kappa: decomposition terms summed over players\n";
  out += "# identity_residual: defect of the per-anchor KL identity\n";
  out += "k,nashconv_base,xi_to_ref,xi_step,sum_m,sum_delta,sum_kappa,identity_residual\n";
  char buf[256];
  for (const auto& r : records) {
    double xi_ref = std::nan("");
    double sm = std::nan(""), sd = std::nan(""), sk = std::nan(""), res = std::nan("");
    if (r.decomposition) {
      const auto& d = *r.decomposition;
      xi_ref = d.xi_star_new;
      sm = sd = sk = 0.0;
      for (double v : d.m) sm += v;
      for (double v : d.delta) sd += v;
      for (double v : d.kappa) sk += v;
      res = d.identity_residual;
    }
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.k,
                  r.nashconv_base, xi_ref, r.xi_step, sm, sd, sk, res);
    out += buf;
  }
  return out;
}

}  // namespace forel
