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


#include "shorrabi/hamiltonian.hpp"

#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {
namespace {

SystemParams random_params(std::mt19937_64& rng, bool with_zeta) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  SystemParams p;
  p.omega = 0.2 * u(rng);
  p.J = 0.5 + u(rng);
  for (double& k : p.k) k = 0.5 + 2.0 * u(rng);
  for (double& g : p.g) g = u(rng) - 0.5;
  if (with_zeta) {
    for (double& z : p.zeta) z = 5.0 * u(rng);
  }
  return p;
}

// Sum of Kronecker-product terms of H_+.
Eigen::VectorXd dense_diagonal(const SystemParams& p, double* offdiag) {
  using oracle::pauli9;
  CMatrix h = CMatrix::Zero(512, 512);
  for (int i = 1; i <= 9; ++i) h -= 0.5 * p.zeta[i - 1] * pauli9({{i, 'Z'}});
  h -= p.omega * pauli9({{1, 'Z'}, {4, 'Z'}, {7, 'Z'}});
  h -= p.J * (p.k[0] * pauli9({{1, 'Z'}, {4, 'Z'}}) + p.k[1] * pauli9({{4, 'Z'}, {7, 'Z'}}) +
              p.k[2] * pauli9({{7, 'Z'}, {1, 'Z'}}));
  for (int i = 0; i < 6; ++i) {
    const int s = kOuterQubits[i];
    h += p.g[i] * pauli9({{s - 1, 'Z'}, {s, 'Z'}});
  }
  *offdiag = (h - CMatrix(h.diagonal().asDiagonal())).cwiseAbs().maxCoeff();
  return h.diagonal().real();
}

CVector random_code_vector(std::mt19937_64& rng) { return oracle::random_code_state(rng); }

TEST(Hamiltonian, DiagonalMatchesKroneckerSum) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 3; ++trial) {
    const SystemParams p = random_params(rng, true);
    double off = 0.0;
    const Eigen::VectorXd expected = dense_diagonal(p, &off);
    EXPECT_EQ(off, 0.0);
    EXPECT_LT((build_hamiltonian(p).energies() - expected).cwiseAbs().maxCoeff(), 1e-13);
  }
}

TEST(Hamiltonian, ValidatesParameters) {
  SystemParams p;
  p.J = 0.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SystemParams{};
  p.omega = -1.0;
  EXPECT_THROW(p.validate(), std::invalid_argument);
  p = SystemParams{};
  p.k[1] = std::nan("");
  EXPECT_THROW(p.validate(), std::invalid_argument);
  EXPECT_NEAR(SystemParams{}.tau(), std::numbers::pi / 2.0, 1e-15);
  SystemParams fast;
  fast.omega = 0.5;
  EXPECT_FALSE(fast.warnings().empty());
}

TEST(Hamiltonian, EvolutionIsPhaseMultiplication) {
  std::mt19937_64 rng(32);
  const SystemParams p = random_params(rng, true);
  const DiagonalHamiltonian h = build_hamiltonian(p);
  const StateVector psi(random_code_vector(rng));
  const double t = 1.37;
  const StateVector out = evolve(h, psi, t);
  for (Eigen::Index b = 0; b < psi.dim(); ++b) {
    const Complex expected = std::polar(1.0, -h.energies()[b] * t) * psi[b];
    EXPECT_LT(std::abs(out[b] - expected), 1e-15);
  }
  // Group property.
  const StateVector twice = evolve(h, evolve(h, psi, 0.4), 0.97);
  EXPECT_LT(max_amplitude_deviation(twice, out), 1e-13);
  const DensityMatrix rho = h.evolve(density_from_pure(psi), t);
  EXPECT_LT(trace_distance(rho, density_from_pure(out)), 1e-12);
}

TEST(Hamiltonian, RabiSignConvention) {
  // For k = 1 and t = tau the state is e^{i omega tau X_L}|0_L> up to phase,
  // whose |1_L> amplitude is +i sin(omega tau) relative to the |0_L> one.
  SystemParams p;
  p.omega = 0.1;
  const CodeSpace& code = shor_code();
  const StateVector out = evolve(build_hamiltonian(p), code.logical_zero(), p.tau());
  const Complex a0 = code.logical_zero().inner(out);
  const Complex a1 = code.logical_one().inner(out);
  const Complex ratio = a1 / a0;
  EXPECT_NEAR(ratio.real(), 0.0, 1e-13);
  EXPECT_NEAR(ratio.imag(), std::tan(p.omega * p.tau()), 1e-13);
}

TEST(ClosedForm, MatchesEvolution) {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> u(0.0, 20.0);
  SystemParams p = random_params(rng, false);
  p.k = {1.0, 1.0, 1.0};
  const DiagonalHamiltonian h = build_hamiltonian(p);
  for (int trial = 0; trial < 10; ++trial) {
    const StateVector psi(random_code_vector(rng));
    const double t = u(rng);
    EXPECT_LT(max_amplitude_deviation(closed_form_state(p, psi, t), evolve(h, psi, t)), 1e-12);
  }
  p.k = {1.0, 2.0, 1.0};
  EXPECT_THROW(closed_form_state(p, shor_code().logical_zero(), 1.0), std::invalid_argument);
  p.k = {1.0, 1.0, 1.0};
  EXPECT_THROW(closed_form_state(p, StateVector::basis(9, 1), 1.0), std::invalid_argument);
}

TEST(PostBitflip, MatchesFlipInsertedIntoEvolution) {
  std::mt19937_64 rng(34);
  SystemParams p = random_params(rng, false);
  p.k = {1.0, 1.0, 1.0};
  const DiagonalHamiltonian h = build_hamiltonian(p);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int r : {1, 4, 7}) {
    for (int trial = 0; trial < 5; ++trial) {
      const StateVector psi(random_code_vector(rng));
      const int m = 1 + trial;
      const double tm = m * p.tau();
      const double tp = tm * (0.05 + 0.9 * u(rng));
      const PauliString xr = PauliString::from_spec({{r, 'X'}}, 9);
      const StateVector brute = evolve(h, apply_to_state(xr, evolve(h, psi, tp)), tm - tp);
      EXPECT_LT(max_amplitude_deviation(post_bitflip_state(p, psi, tp, m, r), brute), 1e-12);
    }
  }
  EXPECT_THROW(post_bitflip_state(p, shor_code().logical_zero(), 0.5, 0, 1), std::invalid_argument);
  EXPECT_THROW(post_bitflip_state(p, shor_code().logical_zero(), 0.5, 1, 2), std::invalid_argument);
}

TEST(RotatingFrame, RemovesSingleQubitTerms) {
  std::mt19937_64 rng(35);
  const SystemParams lab = random_params(rng, true);
  SystemParams bare = lab;
  bare.zeta = {};
  const StateVector psi(random_code_vector(rng));
  const double t = 2.3;
  const StateVector in_frame = rotating_frame(evolve(build_hamiltonian(lab), psi, t), lab.zeta, t);
  EXPECT_LT(max_amplitude_deviation(in_frame, evolve(build_hamiltonian(bare), psi, t)), 1e-12);
}

TEST(ZStringExponential, MatchesCosSinForm) {
  const PauliString z = PauliString::parse("Z1 Z4", 9);
  const double theta = 0.37;
  const CVector d = z_string_exponential(z, theta);
  for (uint32_t b = 0; b < 512; b += 37) {
    const double s = z.z_sign(b);
    EXPECT_LT(std::abs(d[b] - Complex(std::cos(theta), s * std::sin(theta))), 1e-15);
  }
}

}  // namespace
}  // namespace shorrabi
