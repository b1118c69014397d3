#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "forel/batch.hpp"
#include "forel/config.hpp"
#include "forel/game.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

// Config flags shared by `run` and `sweep`, applied on top of file values.
struct Overrides {
  std::vector<std::pair<std::string, std::string>> kv;
};

void add_override_options(CLI::App* cmd, Overrides& ov) {
  static const char* keys[] = {"game",         "transform",   "eta",
                               "eta_decay_target", "eta_half_life", "regularizer",
                               "dt",           "steps",       "mode",
                               "scheme",       "denominator", "anchor_every",
                               "anchors",      "interpolation", "stride",
                               "ref_policy",   "out",         "snapshot_every",
                               "snapshot_prefix", "seed"};
  for (const char* key : keys) {
    cmd->add_option_function<std::string>(
        std::string("--") + key,
        [&ov, key](const std::string& v) { ov.kv.emplace_back(key, v); });
  }
}

forel::RunConfig assemble(const std::string& config_path, const Overrides& ov) {
  forel::RunConfig config;
  if (!config_path.empty()) config = forel::parse_config_file(config_path);
  for (const auto& [k, v] : ov.kv) forel::apply_override(config, k, v);
  config.check();
  return config;
}

int cmd_validate(const std::string& selector) {
  forel::GameTree game = [&] {
    if (selector == "kuhn") return forel::build_kuhn_poker();
    if (selector == "leduc") return forel::build_leduc_poker();
    return forel::load_game_file(selector);
  }();
  auto violations = forel::validate(game);
  int infostates = 0;
  for (int p = 0; p < game.num_players(); ++p) infostates += game.num_infostates(p);
  std::cout << "players: " << game.num_players() << "\nhistories: " << game.num_nodes()
            << "\ninfostates: " << infostates << "\n";
  if (violations.empty()) {
    std::cout << "ok\n";
    return 0;
  }
  for (const auto& v : violations) std::cout << "violation: " << v << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"FoReL dynamics, reward transformation and anchoring for "
               "imperfect-information games"};
  app.require_subcommand(1);

  std::string config_path;
  Overrides run_ov;
  CLI::App* run_cmd = app.add_subcommand("run", "execute one experiment");
  run_cmd->add_option("--config", config_path, "key=value config file");
  add_override_options(run_cmd, run_ov);

  std::vector<std::string> sweep_configs;
  Overrides sweep_ov;
  CLI::App* sweep_cmd =
      app.add_subcommand("sweep", "run several configs concurrently, one output file each");
  sweep_cmd->add_option("configs", sweep_configs, "config files")->required();
  add_override_options(sweep_cmd, sweep_ov);

  std::string game_selector;
  CLI::App* validate_cmd =
      app.add_subcommand("validate-game", "structural and perfect-recall audit");
  validate_cmd->add_option("game", game_selector, "kuhn | leduc | path to a game file")
      ->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run_cmd->parsed()) {
      return forel::run_experiment(assemble(config_path, run_ov));
    }
    if (sweep_cmd->parsed()) {
      std::vector<forel::RunConfig> configs;
      for (const auto& path : sweep_configs) configs.push_back(assemble(path, sweep_ov));
      std::vector<int> status(configs.size(), 0);
#pragma omp parallel for schedule(dynamic)
      for (std::int64_t i = 0; i < static_cast<std::int64_t>(configs.size()); ++i) {
        try {
          status[i] = forel::run_experiment(configs[i]);
        } catch (const std::exception& e) {
#pragma omp critical
          std::cerr << sweep_configs[i] << ": " << e.what() << "\n";
          status[i] = 2;
        }
      }
      int worst = 0;
      for (size_t i = 0; i < status.size(); ++i) {
        std::cout << sweep_configs[i] << ": " << (status[i] == 0 ? "ok" : "failed") << "\n";
        worst = std::max(worst, status[i]);
      }
      return worst;
    }
    if (validate_cmd->parsed()) return cmd_validate(game_selector);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
