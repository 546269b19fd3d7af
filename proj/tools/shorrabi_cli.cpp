// Copyright 2026 The shorrabi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "shorrabi/config.hpp"
#include "shorrabi/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitInvariant = 3;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Logical Rabi oscillation of a nine-qubit Shor code under always-on couplings"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir = ".";
  shorrabi::RunOverrides overrides;
  uint64_t seed = 0;
  int trajectories = 0;
  int quadrature_points = 0;

  for (const std::string& name : shorrabi::subcommand_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--config", config_path, "INI experiment file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory")->capture_default_str();
    sub->add_option("--seed", seed, "trajectory seed (overrides the config)");
    sub->add_option("--trajectories", trajectories, "trajectory ensemble size (evolve)");
    sub->add_option("--quadrature-points", quadrature_points, "midpoint-rule nodes (sweep)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  CLI::App* chosen = app.get_subcommands().front();
  if (chosen->count("--seed")) overrides.seed = seed;
  if (chosen->count("--trajectories")) overrides.trajectories = trajectories;
  if (chosen->count("--quadrature-points")) overrides.quadrature_points = quadrature_points;

  try {
    const shorrabi::Subcommand sub = shorrabi::parse_subcommand(chosen->get_name());
    shorrabi::ExperimentConfig cfg = shorrabi::load_config(config_path);
    shorrabi::apply_overrides(cfg, overrides);
    shorrabi::run_experiment(sub, cfg, out_dir, std::cerr);
  } catch (const shorrabi::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const shorrabi::InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
