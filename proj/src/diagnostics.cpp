#include "forel/diagnostics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace forel {

double lyapunov_J(const GameTree& game, const Policy& reference, const DynamicsState& state,
                  const Regularizer& reg) {
  reference.check_complete(game);
  ReachTable reach = reach_probs(game, reference);
  double j = 0.0;
  for (Player i = 0; i < game.num_players(); ++i) {
    for (int x = 0; x < game.num_infostates(i); ++x) {
      const auto& y = state.scores[i][x];
      const auto& star = reference.probs[i][x];
      double inner = 0.0;
      for (size_t a = 0; a < y.size(); ++a) inner += star[a] * y[a];
      j += reach.infostate_own[i][x] * (reg.conjugate(y) - inner);
    }
  }
  return j;
}

double xi_divergence(const GameTree& game, const Policy& mu, const Policy& pi) {
  mu.check_complete(game);
  pi.check_complete(game);
  ReachTable reach = reach_probs(game, mu);
  double xi = 0.0;
  for (Player i = 0; i < game.num_players(); ++i) {
    for (int x = 0; x < game.num_infostates(i); ++x) {
      const auto& m = mu.probs[i][x];
      const auto& p = pi.probs[i][x];
      double kl = 0.0;
      for (size_t a = 0; a < m.size(); ++a) {
        if (m[a] <= 0.0) continue;  // 0 log 0 = 0
        if (p[a] <= 0.0) return std::numeric_limits<double>::infinity();
        kl += m[a] * std::log(m[a] / p[a]);
      }
      for (int h : game.infostate_histories(i, x)) xi += reach.own[i][h] * kl;
    }
  }
  return xi;
}

RateFit fit_decay_rate(const std::vector<DiagnosticsRecord>& trajectory, double t_lo, double t_hi,
                       double eta) {
  RateFit fit;
  fit.t_lo = t_lo + 0.2 * (t_hi - t_lo);  // transient cut
  fit.t_hi = t_hi;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (const auto& rec : trajectory) {
    if (rec.time < fit.t_lo || rec.time > fit.t_hi) continue;
    if (!(rec.xi > 0.0) || !std::isfinite(rec.xi)) continue;
    double x = rec.time, y = std::log(rec.xi);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 3) throw std::runtime_error("fit_decay_rate: fewer than 3 positive samples in window");
  double denom = n * sxx - sx * sx;
  fit.slope = (n * sxy - sx * sy) / denom;
  fit.intercept = (sy - fit.slope * sx) / n;
  fit.samples = n;
  double rss = 0.0;
  for (const auto& rec : trajectory) {
    if (rec.time < fit.t_lo || rec.time > fit.t_hi) continue;
    if (!(rec.xi > 0.0) || !std::isfinite(rec.xi)) continue;
    double e = std::log(rec.xi) - (fit.intercept + fit.slope * rec.time);
    rss += e * e;
  }
  fit.residual = std::sqrt(rss / n);
  fit.zeta = eta > 0.0 ? -fit.slope / eta : std::numeric_limits<double>::quiet_NaN();
  return fit;
}

RecurrenceStat recurrence_stat(const std::vector<DiagnosticsRecord>& trajectory, double t0) {
  RecurrenceStat stat;
  stat.min_distance = std::numeric_limits<double>::infinity();
  bool found = false;
  for (const auto& rec : trajectory) {
    if (rec.time <= t0) continue;
    if (rec.dist_to_start < stat.min_distance) {
      stat.min_distance = rec.dist_to_start;
      stat.at_time = rec.time;
      stat.at_step = rec.step;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("recurrence_stat: no samples after t0");
  return stat;
}

QreResult qre_fixed_point(const GameTree& game, double eta, const Policy& anchor, double tol,
                          int max_iterations) {
  if (!(eta > 0.0)) throw std::invalid_argument("qre_fixed_point: eta must be positive");
  anchor.check_complete(game);
  for (Player i = 0; i < game.num_players(); ++i)
    if (game.num_infostates(i) != 1)
      throw std::invalid_argument("qre_fixed_point: every player needs exactly one infostate");

  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (int h = 0; h < game.num_nodes(); ++h)
    for (int a = 0; a < game.node(h).num_actions(); ++a)
      for (Player i = 0; i < game.num_players(); ++i) {
        lo = std::min(lo, game.reward(h, a, i));
        hi = std::max(hi, game.reward(h, a, i));
      }
  double beta = std::min(0.5, eta / (eta + (hi - lo)));

  BaseReward base;
  QreResult out;
  out.policy = anchor;
  Policy next = anchor;
  for (int it = 0; it < max_iterations; ++it) {
    ValueTable vt = value_tables(game, out.policy, base);
    double change = 0.0;
    for (Player i = 0; i < game.num_players(); ++i) {
      const auto& q = vt.infostate_q[i][0];
      const auto& mu = anchor.probs[i][0];
      const auto& cur = out.policy.probs[i][0];
      auto& nxt = next.probs[i][0];
      double qmax = q[0];
      for (double v : q) qmax = std::max(qmax, v);
      double norm = 0.0;
      for (size_t a = 0; a < q.size(); ++a) {
        double target = mu[a] * std::exp((q[a] - qmax) / eta);
        nxt[a] = cur[a] * std::pow(target / cur[a], beta);
        norm += nxt[a];
      }
      for (size_t a = 0; a < q.size(); ++a) {
        nxt[a] /= norm;
        change += std::abs(nxt[a] - cur[a]);
      }
    }
    std::swap(out.policy, next);
    out.iterations = it + 1;
    if (change < tol) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace forel
