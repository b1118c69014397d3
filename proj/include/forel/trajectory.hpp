#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "forel/diagnostics.hpp"
#include "forel/dynamics.hpp"

namespace forel {

// Thrown when a step fails mid-run; carries the samples recorded so far so
// callers can persist the partial trajectory, flagged.
class RunAborted : public std::runtime_error {
 public:
  RunAborted(const std::string& what, std::vector<DiagnosticsRecord> partial)
      : std::runtime_error(what), partial_trajectory(std::move(partial)) {}
  std::vector<DiagnosticsRecord> partial_trajectory;
};

struct RunOptions {
  double dt = 0.01;
  long steps = 0;
  int stride = 100;  // diagnostics sampling interval
  StepScheme scheme = StepScheme::alternating;
  ScoreMode mode = ScoreMode::plain_y;
  Regularizer regularizer;
  std::optional<Policy> reference;  // enables the J and xi columns
  std::optional<Policy> start;      // initial policy (default: mirror of zero scores)
  // eta(t) schedule; when set it overrides spec.eta step by step.
  std::function<double(double)> eta_schedule;
  // Invoked at every sampled step after the record is assembled.
  std::function<void(const DiagnosticsRecord&, const DynamicsState&)> on_sample;
};

// Integrates the flow for opts.steps steps and returns one DiagnosticsRecord
// per sampled step (step 0 and every stride-th step after, final step always
// included). Deterministic: identical inputs produce identical trajectories.
std::vector<DiagnosticsRecord> run(const GameTree& game, const TransformSpec& spec,
                                   const RunOptions& opts);

// Trajectory CSV: '#'-prefixed header comments, then one row per sample:
// step,time,nashconv,value_p1,J,xi_ref,policy_dist_to_start. Summary rows
// (rate fits, recurrence) append as "#summary,..." lines.
std::string trajectory_csv(const std::vector<DiagnosticsRecord>& trajectory,
                           const std::vector<std::string>& summary_rows = {});

}  // namespace forel
