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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "shorrabi/analysis.hpp"
#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/schedule.hpp"

namespace shorrabi {

/// Malformed file, unknown section or key, or a value a module rejects.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DiagnosticsSettings {
  uint64_t h_prime_seed = 7;
  std::vector<double> xi_bar{1e-2, 5e-3, 2.5e-3};
  std::vector<double> times{1.0, 10.0, 100.0};  // units of 1/J
  /// Splittings of H0: zeta_i = zeta_unit * 2^(9-i), so every pair of
  /// basis energies differs by at least zeta_unit.
  double zeta_unit = 20.0;
};

/// Everything one invocation needs. Sections and keys:
///
///   [experiment] seed, trajectories, quadrature_points
///   [hamiltonian] omega, J, k1, k4, k7, g2 g3 g5 g6 g8 g9, zeta1..zeta9
///   [noise] epsilon | epsilon_tau, N
///   [schedule] n, periods, mu_over_tau, precorrection, noise_order
///   [state] theta, phi
///   [figure] mu_over_tau, span_over_tau, n
///   [sweep] ns
///   [couplings] tables, k_tolerance, max_denominator
///   [diagnostics] seed, xi_bar, times, zeta_unit
///
/// Numbers accept "a", "a/b", "pi", "a*pi", "pi/b" and "a*pi/b"; lists are
/// comma separated.
struct ExperimentConfig {
  SystemParams params;
  NoiseParams noise;
  SequenceSchedule schedule;
  /// "auto" (derived from k), "none", or a Pauli string such as "Z4 Z7".
  std::string precorrection = "auto";
  /// Initial logical state cos(theta/2)|0_L> + e^{i phi} sin(theta/2)|1_L>.
  double theta = 0.0;
  double phi = 0.0;
  FigureOptions figure;
  std::vector<int> sweep_ns{8, 16, 32, 64};
  std::filesystem::path coupling_tables;  // empty: built-in Gaussian model
  double k_tolerance = 1e-9;
  long long max_denominator = 1000;
  DiagnosticsSettings diagnostics;
  uint64_t seed = 1;
  int trajectories = 0;
  int quadrature_points = 20000;
  /// Directory of the config file, for resolving relative paths.
  std::filesystem::path base_dir;

  StateVector initial_state() const;
};

/// Throws ConfigError.
ExperimentConfig parse_config(std::istream& is, const std::filesystem::path& base_dir = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Strict number parsing as described above. Throws ConfigError.
double parse_config_number(const std::string& text);

}  // namespace shorrabi
