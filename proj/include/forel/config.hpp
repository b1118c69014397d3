#pragma once

#include <optional>
#include <string>

#include "forel/anchoring.hpp"
#include "forel/dynamics.hpp"
#include "forel/reward.hpp"

namespace forel {

// Flat key=value experiment configuration; command-line overrides win over
// file values, unknown keys are rejected.
struct RunConfig {
  std::string game = "kuhn";       // kuhn | leduc | matrix:<path> | polymatrix:<path>
  std::string transform = "none";  // none | monotone | zerosum
  double eta = 1.0;
  std::optional<double> eta_decay_target;  // exponential decay toward this value
  double eta_half_life = 0.0;              // required when decaying
  std::string regularizer = "entropy";     // entropy | l2
  double dt = 0.01;
  long steps = 100000;
  std::string mode = "plain_y";            // plain_y | bounded_w
  std::string scheme = "alternating";      // alternating | euler
  std::string denominator = "per_infostate";  // per_history | per_infostate
  std::optional<long> anchor_every;        // enables the anchoring pipeline
  int anchors = 10;
  std::string interpolation = "hard";      // hard | linear_half
  int stride = 100;
  std::optional<std::string> ref_policy;   // path to a reference policy
  std::string out = "run.csv";
  long snapshot_every = 0;                 // 0 disables policy snapshots
  std::string snapshot_prefix = "policy";
  std::uint64_t seed = 0;                  // nonzero: deterministic random interior start

  // Derived accessors; throw with the offending key on invalid values.
  TransformVariant variant() const;
  RegularizerKind regularizer_kind() const;
  ScoreMode score_mode() const;
  StepScheme step_scheme() const;
  DenominatorMode denominator_mode() const;
  AnchorSchedule::Interpolation interpolation_kind() const;
  void check() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig parse_config_file(const std::string& path);
// Applies "key=value" overrides on top of a parsed config.
void apply_override(RunConfig& config, const std::string& key, const std::string& value);

// Executes the configured experiment, writing CSV (and optional snapshots);
// returns the process exit status.
int run_experiment(const RunConfig& config);

}  // namespace forel
