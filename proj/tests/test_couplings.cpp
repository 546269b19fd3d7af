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


#include "shorrabi/couplings.hpp"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "shorrabi/experiments.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {
namespace {

CouplingTables random_tables(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CouplingTables t;
  for (double& z : t.zeta0) z = 10.0 + u(rng);
  for (Eigen::Matrix2d* m : {&t.v_ab_dot, &t.v_a_dot_b, &t.v_dot_ab}) {
    for (int i = 0; i < 4; ++i) m->data()[i] = u(rng);
  }
  for (double& w : t.w) w = 0.1 * u(rng);
  return t;
}

// Configuration energies written out term by term, level 1 costing zeta0.
double bare_energy(const CouplingTables& t, int a, int b, int c) {
  return a * t.zeta0[0] + b * t.zeta0[1] + c * t.zeta0[2] + t.v_ab_dot(a, b) + t.v_a_dot_b(a, c) +
         t.v_dot_ab(b, c) + t.W(a, b, c);
}

double effective_energy(const TriangleCouplings& k, int a, int b, int c) {
  const double z1 = a ? -1.0 : 1.0, z4 = b ? -1.0 : 1.0, z7 = c ? -1.0 : 1.0;
  return -0.5 * (k.zeta[0] * z1 + k.zeta[1] * z4 + k.zeta[2] * z7) -
         (k.J[0] * z1 * z4 + k.J[1] * z4 * z7 + k.J[2] * z7 * z1) - k.omega * z1 * z4 * z7;
}

TEST(Couplings, DiagonalElementsAgreeOnRandomTables) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 20; ++trial) {
    const CouplingTables t = random_tables(rng);
    const TriangleCouplings k = couplings_from_tables(t);
    const double shift = bare_energy(t, 0, 0, 0) - effective_energy(k, 0, 0, 0);
    for (int i = 0; i < 8; ++i) {
      const int a = i >> 2, b = (i >> 1) & 1, c = i & 1;
      EXPECT_NEAR(bare_energy(t, a, b, c) - effective_energy(k, a, b, c), shift, 1e-13);
      EXPECT_NEAR(table_energies(t)[i], bare_energy(t, a, b, c), 1e-14);
      EXPECT_NEAR(effective_energies(k)[i], effective_energy(k, a, b, c), 1e-14);
    }
  }
}

TEST(Couplings, CyclicRelabelingPermutesCouplings) {
  std::mt19937_64 rng(62);
  const CouplingTables t = random_tables(rng);
  // New dots (1, 4, 7) are old (7, 1, 4).
  CouplingTables r;
  r.zeta0 = {t.zeta0[2], t.zeta0[0], t.zeta0[1]};
  r.v_ab_dot = t.v_a_dot_b.transpose();
  r.v_a_dot_b = t.v_dot_ab.transpose();
  r.v_dot_ab = t.v_ab_dot;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) r.W(a, b, c) = t.W(b, c, a);
    }
  }
  const TriangleCouplings k = couplings_from_tables(t);
  const TriangleCouplings kr = couplings_from_tables(r);
  EXPECT_NEAR(kr.zeta[0], k.zeta[2], 1e-14);
  EXPECT_NEAR(kr.zeta[1], k.zeta[0], 1e-14);
  EXPECT_NEAR(kr.zeta[2], k.zeta[1], 1e-14);
  EXPECT_NEAR(kr.J[0], k.J[2], 1e-14);
  EXPECT_NEAR(kr.J[1], k.J[0], 1e-14);
  EXPECT_NEAR(kr.J[2], k.J[1], 1e-14);
  EXPECT_NEAR(kr.omega, k.omega, 1e-14);
}

TEST(Couplings, LinearInTheTables) {
  std::mt19937_64 rng(63);
  const CouplingTables a = random_tables(rng), b = random_tables(rng);
  CouplingTables sum;
  for (int i = 0; i < 3; ++i) sum.zeta0[i] = 2.0 * a.zeta0[i] - 0.5 * b.zeta0[i];
  sum.v_ab_dot = 2.0 * a.v_ab_dot - 0.5 * b.v_ab_dot;
  sum.v_a_dot_b = 2.0 * a.v_a_dot_b - 0.5 * b.v_a_dot_b;
  sum.v_dot_ab = 2.0 * a.v_dot_ab - 0.5 * b.v_dot_ab;
  for (int i = 0; i < 8; ++i) sum.w[i] = 2.0 * a.w[i] - 0.5 * b.w[i];
  const auto ka = couplings_from_tables(a), kb = couplings_from_tables(b), ks = couplings_from_tables(sum);
  for (int i = 0; i < 3; ++i) {
    EXPECT_NEAR(ks.zeta[i], 2.0 * ka.zeta[i] - 0.5 * kb.zeta[i], 1e-13);
    EXPECT_NEAR(ks.J[i], 2.0 * ka.J[i] - 0.5 * kb.J[i], 1e-13);
  }
  EXPECT_NEAR(ks.omega, 2.0 * ka.omega - 0.5 * kb.omega, 1e-13);
}

TEST(Couplings, OnlyThreeBodyTermGivesOmega) {
  CouplingTables t;
  t.W(1, 1, 1) = 8.0;
  const auto k = couplings_from_tables(t);
  EXPECT_NEAR(k.omega, 1.0, 1e-15);  // -1/8 * (-1)^3 * 8
  CouplingTables pair;
  pair.v_ab_dot(0, 0) = 4.0;
  EXPECT_NEAR(couplings_from_tables(pair).omega, 0.0, 1e-15);
  EXPECT_NEAR(couplings_from_tables(pair).J[0], -1.0, 1e-15);
}

TEST(Couplings, ToSystemParams) {
  TriangleCouplings c;
  c.zeta = {1.0, 2.0, 3.0};
  c.J = {0.5, 1.0, 1.5};
  c.omega = 0.01;
  const SystemParams p = to_system_params(c);
  EXPECT_DOUBLE_EQ(p.J, 0.5);
  EXPECT_EQ(p.k, (std::array<double, 3>{1.0, 2.0, 3.0}));
  EXPECT_DOUBLE_EQ(p.zeta[3], 2.0);
  // The triangle part of H_+ reproduces the effective energies.
  const DiagonalHamiltonian h = build_hamiltonian(p);
  const auto e = effective_energies(c);
  for (int i = 0; i < 8; ++i) {
    const uint32_t basis = ((i >> 2) & 1u) << 8 | ((i >> 1) & 1u) << 5 | (i & 1u) << 2;
    EXPECT_NEAR(h.energies()[basis], e[i], 1e-13);
  }
  c.J[0] = 0.0;
  EXPECT_THROW(to_system_params(c), std::invalid_argument);
}

TEST(Wavefunctions, PointMassesSampleTheKernels) {
  SampledWavefunctions wf;
  for (int r = 0; r < 3; ++r) {
    for (int a = 0; a < 2; ++a) {
      SampledDensity d;
      d.points = {{static_cast<double>(10 * r + a), 0.0}};
      d.density = {1.0};
      d.cell = 1.0;
      wf.dots[r][a] = d;
    }
  }
  const PairKernel v = [](const Point& x, const Point& y) { return x[0] * 100.0 + y[0]; };
  const TripleKernel w = [](const Point& x, const Point& y, const Point& z) {
    return x[0] + y[0] + z[0];
  };
  const CouplingTables t = tables_from_wavefunctions(wf, v, w);
  EXPECT_DOUBLE_EQ(t.v_ab_dot(1, 0), 1.0 * 100.0 + 10.0);
  EXPECT_DOUBLE_EQ(t.v_a_dot_b(0, 1), 0.0 * 100.0 + 21.0);
  EXPECT_DOUBLE_EQ(t.v_dot_ab(1, 1), 11.0 * 100.0 + 21.0);
  EXPECT_DOUBLE_EQ(t.W(1, 0, 1), 1.0 + 10.0 + 21.0);

  wf.dots[1][0].density = {0.5};
  EXPECT_THROW(tables_from_wavefunctions(wf, v, w), std::invalid_argument);
}

TEST(Wavefunctions, GaussianModelIsConsistent) {
  const SampledDensity g = gaussian_density_1d(1.0, 0.5, 3.5, 64);
  EXPECT_NEAR(g.integral(), 1.0, 1e-9);
  const CouplingTables t = gaussian_model_tables();
  const auto k = couplings_from_tables(t);
  for (double j : k.J) EXPECT_GT(j, 0.0);
  const auto lhs = table_energies(t);
  const auto rhs = effective_energies(k);
  for (int i = 1; i < 8; ++i) EXPECT_NEAR(lhs[i] - rhs[i], lhs[0] - rhs[0], 1e-12);
}

TEST(TablesCsv, RoundTrip) {
  std::mt19937_64 rng(64);
  const CouplingTables t = random_tables(rng);
  std::stringstream ss;
  write_tables_csv(ss, t);
  const CouplingTables back = read_tables_csv(ss);
  EXPECT_EQ(back.zeta0, t.zeta0);
  EXPECT_EQ(back.v_ab_dot, t.v_ab_dot);
  EXPECT_EQ(back.v_a_dot_b, t.v_a_dot_b);
  EXPECT_EQ(back.v_dot_ab, t.v_dot_ab);
  EXPECT_EQ(back.w, t.w);
  std::stringstream bad("table,a,b,c,value\nV_xx,0,0,,1\n");
  EXPECT_THROW(read_tables_csv(bad), std::invalid_argument);
}

TEST(DensityCsv, RoundTrip) {
  const SampledDensity g = gaussian_density_1d(0.0, 1.0, 4.0, 16);
  std::stringstream ss;
  write_density_csv(ss, g, 1);
  const SampledDensity back = read_density_csv(ss, g.cell);
  EXPECT_EQ(back.density, g.density);
  EXPECT_EQ(back.points, g.points);
}

TEST(OffDiagonal, RandomMatrixIsHermitianWithZeroDiagonal) {
  const CMatrix a = random_off_diagonal(64, 3);
  EXPECT_TRUE(a == random_off_diagonal(64, 3));
  EXPECT_LT((a - a.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(a.diagonal().cwiseAbs().maxCoeff(), 0.0);
}

TEST(OffDiagonal, XiMeasures) {
  std::array<double, 9> zeta{};
  for (int i = 0; i < 9; ++i) zeta[i] = std::ldexp(1.0, 8 - i);
  const DiagonalHamiltonian h0 = single_qubit_hamiltonian(zeta);
  CMatrix hp = CMatrix::Zero(512, 512);
  hp(0, 1) = hp(1, 0) = 0.5;
  const auto xi = xi_measures(h0, hp);
  const double de = h0.energies()[0] - h0.energies()[1];
  EXPECT_NEAR(xi.xi_bar, std::sqrt(2.0) * 0.5 / std::abs(de), 1e-15);
  CMatrix diag = hp;
  diag(3, 3) = 1.0;
  EXPECT_THROW(xi_measures(h0, diag), std::invalid_argument);
  const DiagonalHamiltonian flat = single_qubit_hamiltonian({});
  EXPECT_THROW(xi_measures(flat, hp), std::invalid_argument);
}

TEST(OffDiagonal, QNormVanishesWithoutCouplingAndScalesLinearly) {
  std::array<double, 9> zeta{};
  for (int i = 0; i < 9; ++i) zeta[i] = 20.0 * std::ldexp(1.0, 8 - i);
  const DiagonalHamiltonian h0 = single_qubit_hamiltonian(zeta);
  const DiagonalHamiltonian h = build_hamiltonian(SystemParams{});
  const EffectiveEvolution none(h0, h, CMatrix::Zero(512, 512));
  EXPECT_LT(none.q_norm(3.0), 1e-10);
  const CMatrix base = random_off_diagonal(512, 9);
  const double xb = xi_measures(h0, base).xi_bar;
  const EffectiveEvolution a(h0, h, base * (1e-3 / xb));
  const EffectiveEvolution b(h0, h, base * (5e-4 / xb));
  EXPECT_NEAR(a.q_norm(2.0) / b.q_norm(2.0), 2.0, 0.05);
  const CMatrix u = a.propagator(2.0);
  EXPECT_LT((u * u.adjoint() - CMatrix::Identity(512, 512)).cwiseAbs().maxCoeff(), 1e-12);
  const CodeSpace& code = shor_code();
  EXPECT_LT(a.deviation(2.0, {code.logical_zero()}), 10.0 * a.q_norm(2.0));
}

}  // namespace
}  // namespace shorrabi
