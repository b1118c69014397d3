#include "forel/trajectory.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace forel {

namespace {

DiagnosticsRecord make_record(const GameTree& game, const RunOptions& opts,
                              const DynamicsState& state, const Policy& start, long step,
                              double eta) {
  DiagnosticsRecord rec;
  rec.step = step;
  rec.time = state.time;
  rec.eta = eta;
  rec.nashconv = nash_conv(game, state.policy);
  BaseReward base;
  ValueTable vt = value_tables(game, state.policy, base);
  rec.root_values.assign(game.num_players(), 0.0);
  for (Player i = 0; i < game.num_players(); ++i) rec.root_values[i] = vt.value[i][game.root()];
  rec.dist_to_start = l1_distance(state.policy, start);
  if (opts.reference) {
    rec.lyapunov = lyapunov_J(game, *opts.reference, state, opts.regularizer);
    rec.xi = xi_divergence(game, *opts.reference, state.policy);
  } else {
    rec.lyapunov = std::numeric_limits<double>::quiet_NaN();
    rec.xi = std::numeric_limits<double>::quiet_NaN();
  }
  return rec;
}

}  // namespace

std::vector<DiagnosticsRecord> run(const GameTree& game, const TransformSpec& spec,
                                   const RunOptions& opts) {
  if (opts.steps < 0) throw std::invalid_argument("run: negative step count");
  if (opts.stride < 1) throw std::invalid_argument("run: stride must be at least 1");
  spec.check(game);

  TransformSpec live = spec;
  DynamicsState state = opts.start
                            ? state_from_policy(game, opts.regularizer, *opts.start, opts.mode)
                            : initial_state(game, opts.regularizer, opts.mode);
  Policy start = state.policy;

  std::vector<DiagnosticsRecord> trajectory;
  trajectory.reserve(static_cast<size_t>(opts.steps / opts.stride) + 2);

  auto sample = [&](long step) {
    DiagnosticsRecord rec = make_record(game, opts, state, start, step, live.eta);
    if (opts.on_sample) opts.on_sample(rec, state);
    trajectory.push_back(std::move(rec));
  };

  for (long n = 0; n <= opts.steps; ++n) {
    if (opts.eta_schedule && live.variant != TransformVariant::none)
      live.eta = opts.eta_schedule(state.time);
    if (n % opts.stride == 0 || n == opts.steps) sample(n);
    if (n == opts.steps) break;
    try {
      if (live.variant == TransformVariant::none) {
        BaseReward base;
        advance(game, base, opts.regularizer, state, opts.dt, opts.scheme, n);
      } else {
        TransformedReward reward(game, live);
        advance(game, reward, opts.regularizer, state, opts.dt, opts.scheme, n);
      }
    } catch (const std::exception& e) {
      throw RunAborted(e.what(), std::move(trajectory));
    }
  }
  return trajectory;
}

std::string trajectory_csv(const std::vector<DiagnosticsRecord>& trajectory,
                           const std::vector<std::string>& summary_rows) {
  std::string out;
  out += "# step: integration step index\n";
  out += "# time: accumulated continuous time\n";
  out += "# nashconv: exploitability of the current policy against the base reward\n";
  out += "# value_p1: player 1 root value under the base reward\n";
  out += "# J: Lyapunov score-space divergence against the reference policy (nan without one)\n";
  out += "# xi_ref: reach-weighted KL from the reference policy (nan without one)\n";
  out += "# policy_dist_to_start: L1 distance to the initial policy\n";
  out += "# eta: effective regularization strength at this step\n";
  out += "step,time,nashconv,value_p1,J,xi_ref,policy_dist_to_start,eta\n";
  char buf[256];
  for (const auto& r : trajectory) {
    std::snprintf(buf, sizeof(buf), "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.step,
                  r.time, r.nashconv, r.root_values.empty() ? 0.0 : r.root_values[0], r.lyapunov,
                  r.xi, r.dist_to_start, r.eta);
    out += buf;
  }
  for (const auto& row : summary_rows) out += "#summary," + row + "\n";
  return out;
}

}  // namespace forel
