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
#include <functional>
#include <iosfwd>
#include <vector>

#include <Eigen/Dense>

#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

/// Single-dot splittings and pairwise / three-body diagonal matrix elements
/// for the central triangle (dots 1, 4, 7). Index a, b, c is the level
/// (0 or 1) of dot 1, 4, 7 respectively; each pair table is indexed by the
/// levels of its two dots in that order.
struct CouplingTables {
  std::array<double, 3> zeta0{};    // bare splittings of dots 1, 4, 7
  Eigen::Matrix2d v_ab_dot = Eigen::Matrix2d::Zero();   // V_{ab.}: dots 1, 4
  Eigen::Matrix2d v_a_dot_b = Eigen::Matrix2d::Zero();  // V_{a.b}: dots 1, 7
  Eigen::Matrix2d v_dot_ab = Eigen::Matrix2d::Zero();   // V_{.ab}: dots 4, 7
  std::array<double, 8> w{};        // W_{abc} at 4a + 2b + c

  double& W(int a, int b, int c) { return w[4 * a + 2 * b + c]; }
  double W(int a, int b, int c) const { return w[4 * a + 2 * b + c]; }
};

/// -1/2 sum zeta_r Z_r - sum J_rr' Z_r Z_r' - omega Z1 Z4 Z7 on the triangle.
struct TriangleCouplings {
  std::array<double, 3> zeta{};  // zeta1, zeta4, zeta7
  std::array<double, 3> J{};     // J14, J47, J71
  double omega = 0.0;
};

TriangleCouplings couplings_from_tables(const CouplingTables& ct);

/// Diagonal energies of the bare problem for the eight level configurations
/// (index 4a + 2b + c): single-dot energies (0 for level 0, zeta0 for level 1)
/// plus every pair and three-body element.
std::array<double, 8> table_energies(const CouplingTables& ct);

/// Diagonal of the effective Hamiltonian, Z eigenvalue (-1)^level.
std::array<double, 8> effective_energies(const TriangleCouplings& c);

/// Maps the triangle couplings onto SystemParams: J = J14, k = J_rr' / J14,
/// the zeta of dots 1, 4, 7, and omega. Outer-qubit terms are left at zero.
SystemParams to_system_params(const TriangleCouplings& c);

using Point = std::array<double, 2>;

/// |psi|^2 sampled at grid points, each point standing for a cell of the
/// given volume (h in 1D, h^2 in 2D).
struct SampledDensity {
  std::vector<Point> points;
  std::vector<double> density;
  double cell = 0.0;

  /// Midpoint-rule integral of the density.
  double integral() const;
};

/// Densities for dot r in {1, 4, 7} (index 0, 1, 2) and level a.
struct SampledWavefunctions {
  std::array<std::array<SampledDensity, 2>, 3> dots;
};

using PairKernel = std::function<double(const Point&, const Point&)>;
using TripleKernel = std::function<double(const Point&, const Point&, const Point&)>;

/// Midpoint-rule double and triple integrals over the grids. zeta0 is left
/// at zero. Throws std::invalid_argument when a density does not integrate
/// to 1 within 1e-6.
CouplingTables tables_from_wavefunctions(const SampledWavefunctions& wf, const PairKernel& v,
                                         const TripleKernel& w);

/// Samples a 1D Gaussian density of the given centre and width on
/// [centre - half_width, centre + half_width] with `points` cells.
SampledDensity gaussian_density_1d(double centre, double sigma, double half_width, int points);

/// Measures of the off-diagonal part H' of H_eff = H0 + H + H'.
struct OffDiagonalDiagnostics {
  /// xi(n, m) = <n|H'|m> / (E0_n - E0_m), 0 where H' vanishes.
  CMatrix xi;
  double xi_bar = 0.0;
  /// Spectral norm of Q(t), e^{-iQ(t)} = U^dagger(t) U_eff(t): the largest
  /// |phase| among the eigenvalues of the unitary U^dagger U_eff.
  double q_norm = 0.0;
};

/// xi matrix and xi_bar only.
OffDiagonalDiagnostics xi_measures(const DiagonalHamiltonian& h0, const CMatrix& h_prime);

/// Full diagnostics at time t. Throws std::invalid_argument when H' has a
/// nonzero diagonal or couples a pair with E0_n = E0_m (xi_bar infinite).
OffDiagonalDiagnostics off_diagonal_diagnostics(const DiagonalHamiltonian& h0,
                                                const DiagonalHamiltonian& h,
                                                const CMatrix& h_prime, double t);

/// Reuses one diagonalization of H_eff for several times.
class EffectiveEvolution {
 public:
  EffectiveEvolution(const DiagonalHamiltonian& h0, const DiagonalHamiltonian& h,
                     const CMatrix& h_prime);
  /// exp(-i H_eff t).
  CMatrix propagator(double t) const;
  /// ||Q(t)||.
  double q_norm(double t) const;
  /// max over the given states of || U_eff psi - U psi ||.
  double deviation(double t, const std::vector<StateVector>& states) const;

 private:
  Eigen::VectorXd diag_;  // energies of H0 + H
  Eigen::VectorXd eval_;
  CMatrix evec_;
};

/// Hermitian matrix with zero diagonal and complex Gaussian off-diagonal
/// entries, deterministic in the seed.
CMatrix random_off_diagonal(int dim, uint64_t seed);

// CSV forms: tables as "table,a,b,c,value" rows (table in zeta0, V_ab.,
// V_a.b, V_.ab, W; zeta0 rows use a = dot label); densities as "x,density"
// or "x,y,density" rows with the cell volume passed separately.
void write_tables_csv(std::ostream& os, const CouplingTables& ct);
CouplingTables read_tables_csv(std::istream& is);
void write_density_csv(std::ostream& os, const SampledDensity& d, int dimension);
SampledDensity read_density_csv(std::istream& is, double cell);

}  // namespace shorrabi
