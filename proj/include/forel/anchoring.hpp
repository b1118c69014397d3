#pragma once

#include <optional>
#include <vector>

#include "forel/diagnostics.hpp"
#include "forel/dynamics.hpp"
#include "forel/reward.hpp"

namespace forel {

struct AnchorSchedule {
  long steps_per_anchor = 20000;
  int num_anchors = 10;
  enum class Interpolation { hard, linear_half } interpolation = Interpolation::hard;
};

// Terms of the per-anchor KL identity
//   Xi(pi*,pi_k) - Xi(pi*,pi_{k-1}) = -Xi(pi_k,pi_{k-1}) + (1/eta) sum_i (m+delta+kappa),
// where kappa uses the infostate Q of the game transformed with the previous
// anchor (per-history denominators) evaluated at pi_k, and m, delta are base-
// reward root-value combinations.
struct AnchorDecomposition {
  std::vector<double> m, delta, kappa;
  double xi_star_new = 0.0;   // Xi(pi*, pi_k)
  double xi_star_prev = 0.0;  // Xi(pi*, pi_{k-1})
  double xi_step = 0.0;       // Xi(pi_k, pi_{k-1})
  double identity_residual = 0.0;
};

AnchorDecomposition anchor_kl_decomposition(const GameTree& game, double eta, const Policy& star,
                                         const Policy& prev, const Policy& next);

struct SolveResult {
  Policy policy;
  double residual = 0.0;  // L1 policy change over the last 1% of the budget
};

// Long-run FoReL under the monotone transform anchored at mu, from zero
// scores; budget 0 returns the mirror map of zero (uniform under entropy).
SolveResult solve_transformed(const GameTree& game, double eta, const Policy& mu,
                              const Regularizer& reg, double dt, long budget,
                              DenominatorMode mode = DenominatorMode::per_infostate,
                              StepScheme scheme = StepScheme::alternating);

struct AnchorRecord {
  int k = 0;
  Policy policy;            // pi_k (as returned; anchors are floored copies)
  double nashconv_base = 0.0;
  double xi_step = 0.0;     // Xi(pi_k, pi_{k-1})
  std::optional<AnchorDecomposition> decomposition;  // filled when a reference is given
};

struct AnchorOptions {
  DenominatorMode mode = DenominatorMode::per_history;  // matches the exact-Nash iteration
  StepScheme scheme = StepScheme::alternating;
  Regularizer regularizer;
  std::optional<Policy> reference;  // base-game Nash for the decomposition diagnostics
  bool reset_scores = false;        // restart from zero scores at each anchor switch
};

// The exact-Nash iteration: pi_0 uniform, pi_k the long-run policy of the
// dynamics under the monotone transform anchored at pi_{k-1}. Scores carry
// across anchor switches (one continuous run whose reward changes every
// steps_per_anchor steps, matching the periodic-reward experiments) unless
// reset_scores is set. linear_half blends the previous and current anchors'
// penalties linearly over the first half of each period.
std::vector<AnchorRecord> iterate_anchors(const GameTree& game, double eta,
                                          const AnchorSchedule& schedule, double dt,
                                          const AnchorOptions& opts = {});

// Per-k margin Xi(pi*,pi_k) - Xi(pi*,pi_{k-1}) + Xi(pi_k,pi_{k-1}); all
// entries are expected nonpositive (up to inner-solve error) when pi* is a
// base-game Nash of a monotone game.
std::vector<double> kl_contraction_check(const GameTree& game, const Policy& star,
                                         const std::vector<Policy>& sequence);

// Per-anchor summary CSV: '#'-prefixed header, then one row per anchor:
// k,nashconv_base,xi_to_ref,xi_step,sum_m,sum_delta,sum_kappa,identity_residual.
std::string anchors_csv(const std::vector<AnchorRecord>& records);

}  // namespace forel
