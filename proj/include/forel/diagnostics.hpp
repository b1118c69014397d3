#pragma once

#include <vector>

#include "forel/dynamics.hpp"
#include "forel/game.hpp"
#include "forel/values.hpp"

namespace forel {

// One sampled row of a dynamics run. J and xi are NaN when no reference
// policy was supplied.
struct DiagnosticsRecord {
  long step = 0;
  double time = 0.0;
  double nashconv = 0.0;
  std::vector<double> root_values;   // per player, base reward
  double lyapunov = 0.0;             // J against the reference
  double xi = 0.0;                   // Xi(reference, pi_t)
  double dist_to_start = 0.0;        // L1 policy distance to the run's start
  double eta = 0.0;                  // effective regularization strength
};

// J(y) = sum_i sum_x rho^{pi*^i}(x) [phi*(y^i(x,.)) - <pi*(.|x), y^i(x,.)>],
// evaluated on the state's scores (w-scores in bounded mode, where the value
// is meaningful up to the entropy mirror map's shift invariance).
double lyapunov_J(const GameTree& game, const Policy& reference, const DynamicsState& state,
                  const Regularizer& reg);

// Reach-weighted KL over histories:
// Xi(mu, pi) = sum_i sum_{h in H_i} rho^{mu^i}(h) KL(mu(.|x(h)), pi(.|x(h))).
// Returns +infinity when pi is zero somewhere mu is positive.
double xi_divergence(const GameTree& game, const Policy& mu, const Policy& pi);

struct RateFit {
  double slope = 0.0;      // least-squares slope of log xi against t
  double intercept = 0.0;
  double t_lo = 0.0;       // fitted window after the transient cut
  double t_hi = 0.0;
  double residual = 0.0;   // rms residual of the fit
  int samples = 0;
  double zeta = 0.0;       // -slope / eta when eta was supplied, else NaN
};

// Fits log xi against t over [t_lo, t_hi], discarding the first 20% of the
// window as start-up transient. Throws if fewer than 3 positive samples
// remain. When eta > 0 the implied rate multiplier zeta is filled in.
RateFit fit_decay_rate(const std::vector<DiagnosticsRecord>& trajectory, double t_lo, double t_hi,
                       double eta = 0.0);

struct RecurrenceStat {
  double min_distance = 0.0;
  double at_time = 0.0;
  long at_step = 0;
};

// Minimum distance back to the starting policy over samples with time > t0.
RecurrenceStat recurrence_stat(const std::vector<DiagnosticsRecord>& trajectory, double t0);

// Damped fixed-point oracle for the regularized equilibrium of a game where
// every player has a single infostate (matrix and polymatrix embeddings):
//   pi^i  <-  normalize(pi^i * (target^i / pi^i)^beta),
//   target^i = normalize(mu^i * exp(Q^i_base(pi^{-i}) / eta)).
// The damping beta = min(0.5, eta / (eta + spread)) shrinks with the payoff
// spread; a fixed beta of 0.5 oscillates for small eta on spread-10 payoffs.
struct QreResult {
  Policy policy;
  int iterations = 0;
  bool converged = false;
};

QreResult qre_fixed_point(const GameTree& game, double eta, const Policy& anchor,
                          double tol = 1e-12, int max_iterations = 2000000);

}  // namespace forel
