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


#include "shorrabi/qec.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {
namespace {

DensityMatrix noisy_code_density(uint64_t seed, double p) {
  std::mt19937_64 rng(seed);
  const CVector v = oracle::random_code_state(rng);
  return DensityMatrix(oracle::depolarize(v * v.adjoint(), p));
}

TEST(QecKind, ParseAndPrint) {
  EXPECT_EQ(parse_qec_kind("bit"), QecKind::Bit);
  EXPECT_EQ(parse_qec_kind("phase"), QecKind::Phase);
  EXPECT_EQ(parse_qec_kind("both"), QecKind::Both);
  EXPECT_EQ(to_string(QecKind::Phase), "phase");
  EXPECT_THROW(parse_qec_kind("all"), std::invalid_argument);
}

TEST(QecChannel, MatchesProjectorOracle) {
  const DensityMatrix rho = noisy_code_density(51, 0.04);
  const CMatrix bit = qec_channel(rho, QecKind::Bit).matrix();
  EXPECT_LT((bit - oracle::bit_qec(rho.matrix())).cwiseAbs().maxCoeff(), 1e-13);
  const CMatrix phase = qec_channel(rho, QecKind::Phase).matrix();
  EXPECT_LT((phase - oracle::phase_qec(rho.matrix())).cwiseAbs().maxCoeff(), 1e-13);
  const CMatrix both = qec_channel(rho, QecKind::Both).matrix();
  EXPECT_LT((both - oracle::phase_qec(oracle::bit_qec(rho.matrix()))).cwiseAbs().maxCoeff(), 1e-13);
}

TEST(QecChannel, CorrectsEverySingleQubitError) {
  std::mt19937_64 rng(52);
  const CVector v = oracle::random_code_state(rng);
  const DensityMatrix rho(CMatrix(v * v.adjoint()));
  for (const PauliString& e : paulis_up_to_weight(9, 1, 1)) {
    const CMatrix m = e.phase() * oracle::pauli([&] {
      std::string s(9, 'I');
      for (int q = 1; q <= 9; ++q) s[q - 1] = e.letter(q);
      return s;
    }());
    const DensityMatrix bad(CMatrix(m * rho.matrix() * m.adjoint()));
    EXPECT_LT(trace_distance(qec_channel(bad, QecKind::Both), rho), 1e-12) << e.str();
  }
}

TEST(SyndromeBranches, ProbabilitiesAndRecovery) {
  const DensityMatrix rho = noisy_code_density(53, 0.03);
  const auto bit = measure_bit_syndrome(rho);
  double total = 0.0;
  CMatrix avg = CMatrix::Zero(512, 512);
  for (const auto& b : bit) {
    total += b.probability;
    EXPECT_GT(b.probability, 0.0);
    avg += b.probability * recover(b).matrix();
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_LT((avg - qec_channel(rho, QecKind::Bit).matrix()).cwiseAbs().maxCoeff(), 1e-13);
  EXPECT_EQ(bit.front().label, "none");

  const auto phase = measure_phase_syndrome(rho);
  ASSERT_EQ(phase.size(), 4u);
  EXPECT_EQ(phase[3].label, "phase block 2");
  EXPECT_EQ(phase[3].recovery, PauliString::parse("Z4", 9));
  total = 0.0;
  for (const auto& b : phase) total += b.probability;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(SyndromeBranches, LabelsNameTheFlaggedQubits) {
  const CodeSpace& code = shor_code();
  const DensityMatrix rho = density_from_pure(apply_to_state(PauliString::parse("X1 Y5", 9),
                                                             code.logical_zero()));
  const auto bit = measure_bit_syndrome(rho);
  ASSERT_EQ(bit.size(), 1u);
  EXPECT_EQ(bit[0].label, "bit-flip qubits 1,5");
  EXPECT_NEAR(multi_error_probability(rho), 1.0, 1e-14);
  const DensityMatrix single =
      density_from_pure(apply_to_state(PauliString::parse("X3", 9), code.logical_zero()));
  EXPECT_EQ(measure_bit_syndrome(single)[0].label, "bit-flip qubit 3");
  EXPECT_NEAR(multi_error_probability(single), 0.0, 1e-14);
}

// First-order oracle for one noisy interval followed by bit QEC:
//   rho(nu) = (1 - 9 eps nu) rho_H(nu)
//           + (eps/3) int_0^nu sum_{i,a} U(nu-t) s_a^i rho_H(t) s_a^i U(nu-t)^dag dt,
// with the integral done by the midpoint rule and QEC by explicit projectors.
TEST(BitQec, MatchesFirstOrderBranchAverage) {
  std::mt19937_64 rng(54);
  const CVector v = oracle::random_code_state(rng);
  SystemParams p;
  p.omega = 0.1;
  const DiagonalHamiltonian h = build_hamiltonian(p);
  const double nu = p.tau() / 6.0;
  const double eps = 1e-4 / nu;
  const int nodes = 16;

  auto rho_h = [&](double t) {
    const CVector u = h.propagator(t);
    const CVector w = u.cwiseProduct(v);
    return CMatrix(w * w.adjoint());
  };
  CMatrix first = (1.0 - 9.0 * eps * nu) * rho_h(nu);
  for (int k = 0; k < nodes; ++k) {
    const double t = (k + 0.5) * nu / nodes;
    const CMatrix mid = rho_h(t);
    const CVector u = h.propagator(nu - t);
    CMatrix sum = CMatrix::Zero(512, 512);
    for (int q = 1; q <= 9; ++q) {
      for (char a : {'X', 'Y', 'Z'}) {
        std::string s(9, 'I');
        s[q - 1] = a;
        sum += oracle::conjugate(oracle::sparse_pauli(s), mid);
      }
    }
    first += (eps / 3.0) * (nu / nodes) * (u.asDiagonal() * sum * u.conjugate().asDiagonal());
  }
  const CMatrix expected = oracle::bit_qec(first);

  NoiseParams np;
  np.epsilon = eps;
  np.N = 256;
  const DensityMatrix noisy = evolve_noisy(DensityMatrix(CMatrix(v * v.adjoint())), nu, h, np);
  const DensityMatrix corrected = qec_channel(noisy, QecKind::Bit);
  // Dropped: second order (9 eps nu)^2 / 2 ~ 4e-7, step size and quadrature.
  EXPECT_LT(oracle::trace_distance(corrected.matrix(), expected), 1e-6);
}

TEST(Precorrection, ParityRule) {
  EXPECT_FALSE(parity_precorrection_for({1.0, 1.0, 1.0}).has_value());
  EXPECT_FALSE(parity_precorrection_for({1.0, 3.0, 5.0}).has_value());
  EXPECT_FALSE(parity_precorrection_for({2.0, 4.0, 2.0}).has_value());
  // Residual factor is the product of the odd pairs' Z strings.
  EXPECT_EQ(parity_precorrection_for({1.0, 2.0, 1.0}), PauliString::parse("Z4 Z7", 9));
  EXPECT_EQ(parity_precorrection_for({2.0, 1.0, 1.0}), PauliString::parse("Z1 Z4", 9));
  EXPECT_EQ(parity_precorrection_for({1.0, 1.0, 2.0}), PauliString::parse("Z7 Z1", 9));
  EXPECT_THROW(parity_precorrection_for({1.0, 1.5, 1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace shorrabi
