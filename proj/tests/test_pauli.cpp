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


#include "shorrabi/pauli.hpp"

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {
namespace {

oracle::CMatrix to_eigen(const std::vector<std::complex<double>>& m, int n) {
  const int dim = 1 << n;
  oracle::CMatrix out(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) out(r, c) = m[static_cast<size_t>(r) * dim + c];
  }
  return out;
}

oracle::CMatrix reference(const PauliString& p) {
  std::string letters(p.num_qubits(), 'I');
  for (int q = 1; q <= p.num_qubits(); ++q) letters[q - 1] = p.letter(q);
  return p.phase() * oracle::pauli(letters);
}

PauliString random_pauli(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<uint32_t> mask(0, (1u << n) - 1);
  std::uniform_int_distribution<int> ph(0, 3);
  return PauliString::from_masks(n, mask(rng), mask(rng), ph(rng));
}

TEST(PauliString, ParseAndPrintRoundTrip) {
  for (const char* text : {"Z1 Z4 Z7", "-X2", "-iY3 Z4", "iX1 Y2 Z9", "I"}) {
    const PauliString p = PauliString::parse(text, 9);
    EXPECT_EQ(PauliString::parse(p.str(), 9), p) << text;
  }
  EXPECT_EQ(PauliString::parse("Z1 Z4 Z7", 9).weight(), 3);
  EXPECT_TRUE(PauliString::parse("I", 9).is_identity_up_to_phase());
}

TEST(PauliString, RejectsMalformedInput) {
  EXPECT_THROW(PauliString::parse("", 9), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("Q1", 9), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("X", 9), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("X10", 9), std::invalid_argument);
  EXPECT_THROW(PauliString::parse("X1 Z1", 9), std::invalid_argument);
  EXPECT_THROW(PauliString::from_spec({{0, 'X'}}, 9), std::invalid_argument);
}

TEST(PauliString, DenseMatrixMatchesKroneckerProduct) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const PauliString p = random_pauli(rng, 4);
    const auto m = to_eigen(dense_matrix(p), 4);
    EXPECT_LT((m - reference(p)).cwiseAbs().maxCoeff(), 1e-15) << p.str();
  }
}

TEST(PauliString, ProductMatchesMatrixProduct) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const PauliString a = random_pauli(rng, 4);
    const PauliString b = random_pauli(rng, 4);
    const auto lhs = to_eigen(dense_matrix(a * b), 4);
    EXPECT_LT((lhs - reference(a) * reference(b)).cwiseAbs().maxCoeff(), 1e-14)
        << a.str() << " * " << b.str();
  }
}

TEST(PauliString, CommutationMatchesCommutator) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 60; ++trial) {
    const PauliString a = random_pauli(rng, 4);
    const PauliString b = random_pauli(rng, 4);
    const auto ma = reference(a), mb = reference(b);
    const bool commute = (ma * mb - mb * ma).cwiseAbs().maxCoeff() < 1e-12;
    EXPECT_EQ(a.commutes(b), commute);
  }
}

TEST(PauliString, DaggerAndHermiticity) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const PauliString a = random_pauli(rng, 3);
    EXPECT_LT((reference(a.dagger()) - reference(a).adjoint()).cwiseAbs().maxCoeff(), 1e-15);
    const bool herm = (reference(a) - reference(a).adjoint()).cwiseAbs().maxCoeff() < 1e-15;
    EXPECT_EQ(a.is_hermitian(), herm);
  }
}

TEST(PauliString, ZSignAndBasisActionAgreeWithDense) {
  const PauliString p = PauliString::parse("-iX1 Y3 Z4", 4);
  const auto m = reference(p);
  for (uint32_t b = 0; b < 16; ++b) {
    const auto [target, coef] = p.act_on_basis(b);
    EXPECT_LT(std::abs(m(target, b) - coef), 1e-15);
    EXPECT_LT(m.col(b).cwiseAbs().sum() - 1.0, 1e-15);
  }
  const PauliString z = PauliString::parse("Z1 Z3", 4);
  for (uint32_t b = 0; b < 16; ++b) {
    EXPECT_DOUBLE_EQ(static_cast<double>(z.z_sign(b)), reference(z)(b, b).real());
  }
}

TEST(PauliString, ApplyToStateMatchesDense) {
  std::mt19937_64 rng(15);
  std::normal_distribution<double> g;
  CVector v(16);
  for (auto& x : v) x = Complex(g(rng), g(rng));
  const StateVector psi = StateVector::normalized(v);
  for (int trial = 0; trial < 20; ++trial) {
    const PauliString p = random_pauli(rng, 4);
    const StateVector out = apply_to_state(p, psi);
    const CVector expected = reference(p) * psi.amplitudes();
    EXPECT_LT((out.amplitudes() - expected).cwiseAbs().maxCoeff(), 1e-14);
  }
}

TEST(PauliString, QubitOneIsTheMostSignificantBit) {
  const PauliString x1 = PauliString::parse("X1", 9);
  EXPECT_EQ(x1.x_mask(), 1u << 8);
  EXPECT_EQ(PauliString::parse("X9", 9).x_mask(), 1u);
}

}  // namespace
}  // namespace shorrabi
