// Copyright 2026 The datashower Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "datashower/experiments.hpp"
#include "datashower/scenario.hpp"

namespace {

// Exit codes: 0 success, 1 usage/config error, 2 runtime/budget error.
constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitRuntime = 2;

struct CommonOptions {
  std::string scenario_path;
  std::string out_dir = "out";
  std::uint64_t seed = 0;
  bool seed_set = false;
  int runs = 0;
  bool runs_set = false;
};

datashower::Scenario load_scenario(const CommonOptions& opts) {
  datashower::Scenario scenario =
      opts.scenario_path.empty()
          ? datashower::Scenario::table1_defaults()
          : datashower::Scenario::from_json_file(opts.scenario_path);
  if (opts.seed_set) {
    scenario.seed = opts.seed;
    scenario.seed_present = true;
  }
  if (opts.runs_set) scenario.runs = opts.runs;
  return scenario;
}

int run_one(const std::string& name, const CommonOptions& opts) {
  datashower::Scenario scenario = load_scenario(opts);
  const auto diagnostics = datashower::validate_scenario(scenario);
  if (!diagnostics.empty()) {
    for (const auto& d : diagnostics) {
      std::cerr << "error: " << d.path << ": " << d.message << "\n";
    }
    return kExitConfig;
  }
  const auto files = datashower::run_experiment(name, scenario, opts.out_dir);
  for (const auto& f : files) {
    std::cout << f << "\n";
  }
  return kExitOk;
}

int run_validate(const CommonOptions& opts) {
  if (opts.scenario_path.empty()) {
    std::cerr << "error: validate needs --scenario <file>\n";
    return kExitConfig;
  }
  datashower::Scenario scenario =
      datashower::Scenario::from_json_file(opts.scenario_path);
  const auto diagnostics = datashower::validate_scenario(scenario);
  for (const auto& d : diagnostics) {
    std::cout << d.path << ": " << d.message << "\n";
  }
  return diagnostics.empty() ? kExitOk : kExitConfig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "datashower: distance-switched mmWave/THz V2I link simulator.\n"
      "Runs figure-style experiments against a scenario config and emits\n"
      "plot-ready CSVs (deterministic for a fixed scenario and seed)."};
  app.require_subcommand(1);

  CommonOptions opts;
  std::string chosen;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", opts.scenario_path,
                    "Scenario JSON (default: built-in table1_defaults)");
    cmd->add_option("--out", opts.out_dir, "Output directory");
    cmd->add_option("--seed", opts.seed, "Master seed override")
        ->each([&](const std::string&) { opts.seed_set = true; });
    cmd->add_option("--runs", opts.runs, "Monte Carlo run count override")
        ->each([&](const std::string&) { opts.runs_set = true; });
  };

  for (const std::string& name : datashower::experiment_names()) {
    CLI::App* cmd = app.add_subcommand(name, "Run the " + name + " experiment");
    add_common(cmd);
    cmd->callback([&chosen, name] { chosen = name; });
  }
  CLI::App* validate =
      app.add_subcommand("validate", "Check a scenario file and list every "
                                     "violated invariant");
  add_common(validate);
  validate->callback([&chosen] { chosen = "validate"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (chosen == "validate") {
      return run_validate(opts);
    }
    return run_one(chosen, opts);
  } catch (const datashower::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const datashower::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
}
