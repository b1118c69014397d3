#include "forel/config.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "forel/batch.hpp"
#include "forel/trajectory.hpp"

namespace forel {

namespace {

[[noreturn]] void usage_error(const std::string& key, const std::string& why) {
  throw std::invalid_argument("config: key '" + key + "' " + why);
}

double parse_double(const std::string& key, const std::string& v) {
  size_t pos = 0;
  double x;
  try {
    x = std::stod(v, &pos);
  } catch (const std::exception&) {
    usage_error(key, "is not a number: '" + v + "'");
  }
  if (pos != v.size()) usage_error(key, "has trailing characters: '" + v + "'");
  return x;
}

long parse_long(const std::string& key, const std::string& v) {
  size_t pos = 0;
  long x;
  try {
    x = std::stol(v, &pos);
  } catch (const std::exception&) {
    usage_error(key, "is not an integer: '" + v + "'");
  }
  if (pos != v.size()) usage_error(key, "has trailing characters: '" + v + "'");
  return x;
}

}  // namespace

TransformVariant RunConfig::variant() const {
  if (transform == "none") return TransformVariant::none;
  if (transform == "monotone") return TransformVariant::monotone;
  if (transform == "zerosum") return TransformVariant::zerosum;
  usage_error("transform", "must be none|monotone|zerosum");
}

RegularizerKind RunConfig::regularizer_kind() const {
  if (regularizer == "entropy") return RegularizerKind::entropy;
  if (regularizer == "l2") return RegularizerKind::l2;
  usage_error("regularizer", "must be entropy|l2");
}

ScoreMode RunConfig::score_mode() const {
  if (mode == "plain_y") return ScoreMode::plain_y;
  if (mode == "bounded_w") return ScoreMode::bounded_w;
  usage_error("mode", "must be plain_y|bounded_w");
}

StepScheme RunConfig::step_scheme() const {
  if (scheme == "alternating") return StepScheme::alternating;
  if (scheme == "euler") return StepScheme::simultaneous;
  usage_error("scheme", "must be alternating|euler");
}

DenominatorMode RunConfig::denominator_mode() const {
  if (denominator == "per_history") return DenominatorMode::per_history;
  if (denominator == "per_infostate") return DenominatorMode::per_infostate;
  usage_error("denominator", "must be per_history|per_infostate");
}

AnchorSchedule::Interpolation RunConfig::interpolation_kind() const {
  if (interpolation == "hard") return AnchorSchedule::Interpolation::hard;
  if (interpolation == "linear_half") return AnchorSchedule::Interpolation::linear_half;
  usage_error("interpolation", "must be hard|linear_half");
}

void RunConfig::check() const {
  variant();
  regularizer_kind();
  score_mode();
  step_scheme();
  denominator_mode();
  interpolation_kind();
  if (!(dt > 0.0)) usage_error("dt", "must be positive");
  if (steps < 0) usage_error("steps", "must be nonnegative");
  if (stride < 1) usage_error("stride", "must be at least 1");
  if (variant() != TransformVariant::none && !(eta > 0.0)) usage_error("eta", "must be positive");
  if (eta_decay_target) {
    if (*eta_decay_target < 0.0) usage_error("eta_decay_target", "must be nonnegative");
    if (!(eta_half_life > 0.0))
      usage_error("eta_half_life", "must be positive when eta_decay_target is set");
  }
  if (anchor_every) {
    if (*anchor_every < 1) usage_error("anchor_every", "must be at least 1");
    if (anchors < 1) usage_error("anchors", "must be at least 1");
  }
  if (snapshot_every < 0) usage_error("snapshot_every", "must be nonnegative");
  if (out.empty()) usage_error("out", "must not be empty");
}

void apply_override(RunConfig& c, const std::string& key, const std::string& value) {
  if (key == "game") c.game = value;
  else if (key == "transform") c.transform = value;
  else if (key == "eta") c.eta = parse_double(key, value);
  else if (key == "eta_decay_target") c.eta_decay_target = parse_double(key, value);
  else if (key == "eta_half_life") c.eta_half_life = parse_double(key, value);
  else if (key == "regularizer") c.regularizer = value;
  else if (key == "dt") c.dt = parse_double(key, value);
  else if (key == "steps") c.steps = parse_long(key, value);
  else if (key == "mode") c.mode = value;
  else if (key == "scheme") c.scheme = value;
  else if (key == "denominator") c.denominator = value;
  else if (key == "anchor_every") c.anchor_every = parse_long(key, value);
  else if (key == "anchors") c.anchors = static_cast<int>(parse_long(key, value));
  else if (key == "interpolation") c.interpolation = value;
  else if (key == "stride") c.stride = static_cast<int>(parse_long(key, value));
  else if (key == "ref_policy") c.ref_policy = value;
  else if (key == "out") c.out = value;
  else if (key == "snapshot_every") c.snapshot_every = parse_long(key, value);
  else if (key == "snapshot_prefix") c.snapshot_prefix = value;
  else if (key == "seed") c.seed = static_cast<std::uint64_t>(parse_long(key, value));
  else usage_error(key, "is unknown");
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(lineno) +
                                  " is not key=value: " + line);
    std::string key = line.substr(start, eq - start);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      size_t a = s.find_first_not_of(" \t\r");
      size_t b = s.find_last_not_of(" \t\r");
      s = a == std::string::npos ? "" : s.substr(a, b - a + 1);
    };
    strip(key);
    strip(value);
    apply_override(c, key, value);
  }
  return c;
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

namespace {

GameTree load_configured_game(const std::string& selector) {
  if (selector == "kuhn") return build_kuhn_poker();
  if (selector == "leduc") return build_leduc_poker();
  if (selector.rfind("matrix:", 0) == 0) return load_game_file(selector.substr(7));
  if (selector.rfind("polymatrix:", 0) == 0) return load_game_file(selector.substr(11));
  usage_error("game", "must be kuhn|leduc|matrix:<path>|polymatrix:<path>");
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

}  // namespace

int run_experiment(const RunConfig& config) {
  config.check();
  GameTree game = load_configured_game(config.game);

  std::optional<Policy> reference;
  if (config.ref_policy) reference = load_policy(game, *config.ref_policy);

  Regularizer reg{config.regularizer_kind()};

  if (config.anchor_every) {
    AnchorSchedule schedule;
    schedule.steps_per_anchor = *config.anchor_every;
    schedule.num_anchors = config.anchors;
    schedule.interpolation = config.interpolation_kind();
    AnchorOptions opts;
    opts.mode = config.denominator_mode();
    opts.scheme = config.step_scheme();
    opts.regularizer = reg;
    opts.reference = reference;
    auto records = iterate_anchors(game, config.eta, schedule, config.dt, opts);
    write_text_file(config.out, anchors_csv(records));
    if (config.snapshot_every > 0) {
      for (const auto& r : records)
        if (r.k % config.snapshot_every == 0)
          save_policy(r.policy, config.snapshot_prefix + "_k" + std::to_string(r.k) + ".txt");
    }
    return 0;
  }

  TransformSpec spec;
  spec.variant = config.variant();
  if (spec.variant != TransformVariant::none) {
    spec.eta = config.eta;
    spec.anchor = Policy::uniform(game);
    spec.denominator = config.denominator_mode();
  }

  RunOptions opts;
  opts.dt = config.dt;
  opts.steps = config.steps;
  opts.stride = config.stride;
  opts.scheme = config.step_scheme();
  opts.mode = config.score_mode();
  opts.regularizer = reg;
  opts.reference = reference;
  if (config.seed != 0) opts.start = random_interior_policy(game, config.seed);
  if (config.eta_decay_target) {
    double eta_max = config.eta;
    double target = *config.eta_decay_target;
    double half_life = config.eta_half_life;
    opts.eta_schedule = [eta_max, target, half_life](double t) {
      return target + (eta_max - target) * std::exp2(-t / half_life);
    };
  }

  long snapshot_every = config.snapshot_every;
  std::string snapshot_prefix = config.snapshot_prefix;
  if (snapshot_every > 0) {
    opts.on_sample = [&](const DiagnosticsRecord& rec, const DynamicsState& state) {
      if (rec.step % snapshot_every == 0)
        save_policy(state.policy, snapshot_prefix + "_s" + std::to_string(rec.step) + ".txt");
    };
  }

  std::vector<std::string> summaries;
  std::vector<DiagnosticsRecord> trajectory;
  try {
    trajectory = run(game, spec, opts);
  } catch (const RunAborted& e) {
    // flag the partial artifact rather than dropping it
    summaries.push_back(std::string("aborted,") + e.what());
    write_text_file(config.out, trajectory_csv(e.partial_trajectory, summaries));
    std::cerr << "run failed: " << e.what() << "\n";
    return 2;
  }

  if (reference && trajectory.size() >= 3) {
    double t_end = trajectory.back().time;
    try {
      RateFit fit = fit_decay_rate(trajectory, 0.0, t_end, config.eta);
      char buf[160];
      std::snprintf(buf, sizeof(buf), "rate_fit,slope=%.17g,window=[%.6g;%.6g],samples=%d",
                    fit.slope, fit.t_lo, fit.t_hi, fit.samples);
      summaries.emplace_back(buf);
    } catch (const std::exception&) {
      // no positive xi samples; nothing to summarize
    }
  }
  if (trajectory.size() >= 2) {
    RecurrenceStat stat = recurrence_stat(trajectory, trajectory.back().time / 4.0);
    char buf[160];
    std::snprintf(buf, sizeof(buf), "recurrence,min_dist=%.17g,at_time=%.6g", stat.min_distance,
                  stat.at_time);
    summaries.emplace_back(buf);
  }
  write_text_file(config.out, trajectory_csv(trajectory, summaries));
  return 0;
}

}  // namespace forel
