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

#include <array>
#include <numbers>
#include <string>
#include <vector>

#include "shorrabi/pauli.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

/// Couplings of the always-on Hamiltonian
///
///   H_+ = -1/2 sum_i zeta_i Z_i
///         - omega Z1 Z4 Z7 - J (k1 Z1 Z4 + k4 Z4 Z7 + k7 Z7 Z1)
///         + sum_{s in 2,3,5,6,8,9} g_s Z_{s-1} Z_s.
struct SystemParams {
  double omega = 0.1;
  double J = 1.0;
  std::array<double, 3> k{1.0, 1.0, 1.0};  // k1, k4, k7
  std::array<double, 6> g{};                // g2, g3, g5, g6, g8, g9
  std::array<double, 9> zeta{};             // zeta1 .. zeta9

  /// Period of the discrete logical oscillation, pi / (2J).
  double tau() const { return std::numbers::pi / (2.0 * J); }

  /// Throws std::invalid_argument for J <= 0, omega < 0 or non-finite values.
  void validate() const;
  /// Advisory findings, e.g. omega not small against J.
  std::vector<std::string> warnings() const;

  bool unit_k() const { return k == std::array<double, 3>{1.0, 1.0, 1.0}; }
  bool zero_zeta() const;
};

/// Labels of the central-triangle qubits.
inline constexpr std::array<int, 3> kTriangleQubits{1, 4, 7};
/// Labels of the outer qubits carrying g_s.
inline constexpr std::array<int, 6> kOuterQubits{2, 3, 5, 6, 8, 9};

/// H_+ in the computational basis, where it is diagonal.
class DiagonalHamiltonian {
 public:
  explicit DiagonalHamiltonian(Eigen::VectorXd energies);

  const Eigen::VectorXd& energies() const { return energies_; }
  int num_qubits() const { return n_; }

  /// Diagonal of e^{-iHt}.
  CVector propagator(double t) const;

  StateVector evolve(const StateVector& psi, double t) const;
  DensityMatrix evolve(const DensityMatrix& rho, double t) const;

 private:
  int n_;
  Eigen::VectorXd energies_;
};

DiagonalHamiltonian build_hamiltonian(const SystemParams& p);

/// e^{-iHt} psi by exact per-basis-state phases.
StateVector evolve(const DiagonalHamiltonian& h, const StateVector& psi, double t);

/// Closed-form noiseless evolution for k = (1,1,1) and zeta = 0:
///
///   e^{-i sum g t} { (cos^3 Jt - i sin^3 Jt) e^{i omega t X_L} psi0
///       + (i/2) e^{iJt} sin(2Jt) sum_r Z_r X_L e^{i omega t X_L} psi0 }.
///
/// Throws std::invalid_argument if psi0 leaves the code space or the
/// parameters are outside that case.
StateVector closed_form_state(const SystemParams& p, const StateVector& psi0, double t);

/// Closed form of e^{-iH(t_m - t')} X_r e^{-iHt'} psi0 with t_m = m tau, for a
/// bit flip on triangle qubit r in {1, 4, 7} at time t' in (0, t_m):
///
///   e^{-i[g_{r+1}(2t' - t_m) + sum_{s != r+1} g_s t_m]}
///     X_r e^{iJ(2t' - t_m)(Z_a Z_r + Z_r Z_b)} (i Z_a Z_b)^m
///     e^{i omega (2t' - t_m) X_L} psi0,
///
/// where a, b are the other two triangle qubits.
StateVector post_bitflip_state(const SystemParams& p, const StateVector& psi0,
                               double t_prime, int m, int r = 1);

/// Moves a laboratory-frame state into the frame rotating with the
/// single-qubit terms: U_0^dagger psi, U_0^dagger rho U_0 with
/// U_0 = exp((i/2) sum zeta_i Z_i t).
StateVector rotating_frame(const StateVector& psi, const std::array<double, 9>& zeta, double t);
DensityMatrix rotating_frame(const DensityMatrix& rho, const std::array<double, 9>& zeta,
                             double t);

/// Diagonal of e^{iθ P} for a Z-type Pauli P (phase +1).
CVector z_string_exponential(const PauliString& z_string, double theta);

}  // namespace shorrabi
