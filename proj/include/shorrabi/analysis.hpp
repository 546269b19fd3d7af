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
#include <string>
#include <vector>

#include "shorrabi/csv.hpp"
#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

/// sin(x)/x with a Taylor branch for |x| < 1e-4 (sinc(0) = 1 exactly).
double sinc(double x);

struct SincCoefficients {
  double a_plus;
  double a_minus;
};

/// a_n^{+-} = 3/16 + sinc(4 pi/n)/16 +- sinc(2 pi/n)/4.
SincCoefficients sinc_coefficients(int n);

/// One row of a first-order branch table.
struct BranchRow {
  std::string error;            // error class / syndrome outcome
  int multiplicity;             // how many outcomes share this row
  double probability;           // per outcome
  std::string corrected_state;  // descriptor of the corrected state
};

/// Bit-flip QEC over (0, tau] with n bit-QEC steps, to first order in
/// eps*tau: "none", one row per outer qubit s, one row per triangle qubit r.
std::vector<BranchRow> bit_branch_table(double eps_tau);

/// Phase-syndrome outcomes at tau after a bit flip on a triangle qubit r
/// (conditional probabilities). "none" and "Z_r" are distinct outcomes with
/// 3/8 + sinc(4 pi/n)/8 each; the two Z_{r'} outcomes carry
/// 1/8 - sinc(4 pi/n)/8 each. The four sum to 1.
std::vector<BranchRow> phase_branch_table(int n);

/// Midpoint rule for
///   rho_e^(r)(tau) = (1/nu) int_0^nu e^{2iJ Z_r X_L t'} rho_H(tau - 2t') e^{-2iJ Z_r X_L t'} dt'
/// with nu = tau / n and rho_H started from psi0.
DensityMatrix brute_force_rho_e(const SystemParams& params, const StateVector& psi0, int r,
                                int n, int quadrature_points);

/// Phase-syndrome statistics of (rho_e + Z_r rho_e Z_r)/2 from the same
/// midpoint rule, evaluated on pure states restricted to their support.
/// Cheap enough for 10^5+ nodes.
struct PhaseBranchQuadrature {
  /// Indexed by phase syndrome (0 = trivial, see CodeSpace).
  std::array<double, 4> probability{};
  /// <i_L| R_s Pi_s rho Pi_s R_s |j_L>, unnormalized.
  std::array<Eigen::Matrix2cd, 4> logical_block;
};

PhaseBranchQuadrature phase_branch_quadrature(const SystemParams& params, const StateVector& psi0,
                                              int r, int n, int quadrature_points);

/// a_n^{+-} read off the trivial-syndrome block for psi0 = |0_L>: the
/// weights of |0_L><0_L| and |1_L><1_L|. Accurate up to O(omega tau).
SincCoefficients quadrature_sinc_coefficients(const SystemParams& params, int n,
                                              int quadrature_points);

/// rho_H - eps_tau [1 - sinc(2 pi/n)] (rho_H - X_L rho_H X_L).
DensityMatrix predicted_rho_c(const DensityMatrix& rho_h_tau, double eps_tau, int n);

/// 2 pi^2 eps_tau L_yz / (3 n^2). Requires n >= 8.
double predicted_distance(double eps_tau, int n, double l_yz);

/// Length of the (y, z) projection of the logical Bloch vector.
double l_yz(const DensityMatrix& rho);

/// (1/sqrt(eps tau)) min(1, eps/omega).
double required_n(double epsilon, double omega, double tau);

struct FirstOrderReport {
  std::vector<BranchRow> bit_table;
  std::vector<BranchRow> phase_table;
  double a_plus = 0.0;
  double a_minus = 0.0;
  DensityMatrix rho_c_predicted = DensityMatrix::maximally_mixed(1);
  double l_yz = 0.0;
  double distance_predicted = 0.0;
  /// max((eps tau)^2, (omega tau)^2), the size of the dropped terms.
  double dropped_order = 0.0;
};

/// First-order predictions for one period starting from psi0.
FirstOrderReport first_order_report(const SystemParams& params, double epsilon, int n,
                                    const StateVector& psi0);

/// (cos^6 Jt + sin^6 Jt) cos^2(omega t), the noiseless |0_L> population for
/// k = (1,1,1) starting from |0_L>.
double hamiltonian_p0l_closed_form(const SystemParams& params, double t);

/// Simulated rho_c(tau) against rho_H(tau) for each n.
struct DistanceSweepRow {
  int n;
  double distance;
  double predicted;
  double l_yz;
};

std::vector<DistanceSweepRow> distance_sweep(const SystemParams& params, const NoiseParams& np,
                                             const StateVector& psi0, const std::vector<int>& ns);

/// Least-squares fit distance = intercept + slope / n^2.
struct LineFit {
  double slope;
  double intercept;
};
LineFit fit_inverse_square(const std::vector<DistanceSweepRow>& rows);

/// Adds the Hamiltonian and noise parameters to the comment line.
void echo_params(CsvTable& t, const SystemParams& p, const NoiseParams& np);

CsvTable sweep_table(const SystemParams& params, const NoiseParams& np,
                     const std::vector<DistanceSweepRow>& rows);

enum class Figure { Fig2, Fig3, Fig4 };

Figure parse_figure(const std::string& name);

/// np.N sets the subintervals per interval, which are also the sample
/// points between QEC instants.
struct FigureOptions {
  /// Bit-QEC intervals per tau (fig4).
  int n = 6;
  /// Naive phase-QEC interval in units of tau (fig2).
  double mu_over_tau = 0.5;
  /// Time span in units of tau; 0 means one Rabi period 2 pi/omega.
  double span_over_tau = 0.0;
};

/// Plot data for the three figures, starting from |0_L>:
///   fig2: rabi, hamiltonian, naive_qec
///   fig3: rabi, hamiltonian, hamiltonian_closed_form, dot
///   fig4: rabi, hamiltonian, noisy, corrected, dot
/// Every table starts with t_over_tau, omega_t and stage columns.
CsvTable figure_series(Figure which, const SystemParams& params, const NoiseParams& np,
                       const FigureOptions& options = {});

}  // namespace shorrabi
