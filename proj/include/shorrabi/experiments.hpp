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


#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shorrabi/config.hpp"
#include "shorrabi/couplings.hpp"

namespace shorrabi {

enum class Subcommand { Evolve, Sequence, Fig2, Fig3, Fig4, KlCheck, Couplings, Diagnostics, Sweep };

/// "evolve", "sequence", "fig2", "fig3", "fig4", "kl-check", "couplings",
/// "diagnostics", "sweep".
const std::vector<std::string>& subcommand_names();
Subcommand parse_subcommand(const std::string& name);
std::string to_string(Subcommand s);

/// A result broke a physical invariant (trace, positivity of populations,
/// Knill-Laflamme, coupling consistency).
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct NamedOutput {
  std::string filename;
  std::string content;
};

struct ExperimentOutput {
  std::vector<NamedOutput> files;
  std::vector<std::string> violations;
  std::vector<std::string> notes;
};

/// Command-line values that take precedence over the config file.
struct RunOverrides {
  std::optional<uint64_t> seed;
  std::optional<int> trajectories;
  std::optional<int> quadrature_points;
};
void apply_overrides(ExperimentConfig& cfg, const RunOverrides& o);

/// Computes the CSV outputs of one subcommand. Deterministic in the config.
ExperimentOutput build_outputs(Subcommand s, const ExperimentConfig& cfg);

/// build_outputs, then writes every file into out_dir (created if needed)
/// and echoes notes to `log`. Throws InvariantViolation after writing when
/// any violation was found.
std::vector<std::filesystem::path> run_experiment(Subcommand s, const ExperimentConfig& cfg,
                                                  const std::filesystem::path& out_dir,
                                                  std::ostream& log);

/// Coupling tables of three 1D Gaussian dots with a softened Coulomb pair
/// kernel and a short-range three-body term; the default for `couplings`.
CouplingTables gaussian_model_tables();

/// Basis energies of -1/2 sum zeta_i Z_i.
DiagonalHamiltonian single_qubit_hamiltonian(const std::array<double, 9>& zeta);

}  // namespace shorrabi
