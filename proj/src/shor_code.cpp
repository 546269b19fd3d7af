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

#include "shorrabi/shor_code.hpp"

#include <cmath>
#include <stdexcept>

namespace shorrabi {

namespace {

// (|000> + sign|111>)^{(x)3} / 2^{3/2}, qubit 1 most significant.
StateVector block_product(int sign) {
  CVector v = CVector::Zero(1 << kShorQubits);
  const double amp = 1.0 / std::pow(2.0, 1.5);
  for (int pattern = 0; pattern < 8; ++pattern) {
    uint32_t index = 0;
    int coefficient = 1;
    for (int block = 0; block < 3; ++block) {
      const bool ones = (pattern >> (2 - block)) & 1;
      index = (index << 3) | (ones ? 0b111u : 0u);
      if (ones) coefficient *= sign;
    }
    v[index] = amp * coefficient;
  }
  return StateVector(std::move(v));
}

PauliString parse9(const char* text) { return PauliString::parse(text, kShorQubits); }

}  // namespace

CodeSpace::CodeSpace()
    : zero_(block_product(+1)),
      one_(block_product(-1)),
      logical_x_(parse9("Z1 Z4 Z7")),
      logical_y_(kShorQubits),
      logical_z_(parse9("X1 X2 X3")) {
  projector_ = zero_.amplitudes() * zero_.amplitudes().adjoint() +
               one_.amplitudes() * one_.amplitudes().adjoint();
  for (const char* g : {"Z1 Z2", "Z2 Z3", "Z4 Z5", "Z5 Z6", "Z7 Z8", "Z8 Z9"}) {
    bit_gens_.push_back(parse9(g));
  }
  phase_gens_ = {parse9("X1 X2 X3 X4 X5 X6"), parse9("X4 X5 X6 X7 X8 X9")};
  // Y = iXZ at the logical level.
  logical_y_ = (logical_x_ * logical_z_).with_phase_power(
      (logical_x_ * logical_z_).phase_power() + 1);

  const uint32_t dim = 1u << kShorQubits;
  bit_syndrome_.resize(dim);
  for (uint32_t b = 0; b < dim; ++b) {
    uint16_t s = 0;
    for (size_t j = 0; j < bit_gens_.size(); ++j) {
      if (bit_gens_[j].z_sign(b) < 0) s |= uint16_t(1u << j);
    }
    bit_syndrome_[b] = s;
  }
  bit_corrections_.resize(64);
  for (uint16_t s = 0; s < 64; ++s) {
    uint32_t mask = 0;
    for (int q : bit_syndrome_qubits(s)) mask |= logical_x_.qubit_bit(q);
    bit_corrections_[s] = mask;
  }
}

std::vector<int> CodeSpace::bit_syndrome_qubits(uint16_t syndrome) const {
  std::vector<int> qubits;
  for (int block = 0; block < 3; ++block) {
    const bool first = (syndrome >> (2 * block)) & 1;   // Z_a Z_b
    const bool second = (syndrome >> (2 * block + 1)) & 1;  // Z_b Z_c
    const int base = 3 * block + 1;
    if (first && second) {
      qubits.push_back(base + 1);
    } else if (first) {
      qubits.push_back(base);
    } else if (second) {
      qubits.push_back(base + 2);
    }
  }
  return qubits;
}

int CodeSpace::phase_syndrome_block(uint16_t syndrome) {
  switch (syndrome & 3) {
    case 1:
      return 1;
    case 3:
      return 2;
    case 2:
      return 3;
    default:
      return 0;
  }
}

PauliString CodeSpace::phase_block_representative(int block) const {
  if (block < 1 || block > 3) throw std::invalid_argument("phase block must be 1, 2 or 3");
  return PauliString::from_spec({{3 * block - 2, 'Z'}}, kShorQubits);
}

StateVector CodeSpace::logical_state(Complex a, Complex b) const {
  return StateVector::normalized(a * zero_.amplitudes() + b * one_.amplitudes());
}

double CodeSpace::code_weight(const StateVector& psi) const {
  return std::norm(zero_.inner(psi)) + std::norm(one_.inner(psi));
}

Eigen::Matrix2cd CodeSpace::logical_block(const DensityMatrix& rho) const {
  const CVector* basis[2] = {&zero_.amplitudes(), &one_.amplitudes()};
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i) {
    const CVector column = rho.matrix() * *basis[i];
    for (int j = 0; j < 2; ++j) m(j, i) = basis[j]->dot(column);
  }
  return m;
}

double CodeSpace::code_weight(const DensityMatrix& rho) const {
  return logical_block(rho).trace().real();
}

std::array<double, 3> CodeSpace::logical_bloch(const DensityMatrix& rho) const {
  const Eigen::Matrix2cd m = logical_block(rho);
  const double w = m.trace().real();
  if (!(w > 0.0)) return {0.0, 0.0, 0.0};
  // rho_L = (I + x X + y Y + z Z) / 2 in the {|0_L>, |1_L>} basis.
  const double x = 2.0 * m(1, 0).real() / w;
  const double y = 2.0 * m(1, 0).imag() / w;
  const double z = (m(0, 0) - m(1, 1)).real() / w;
  return {x, y, z};
}

bool CodeSpace::acts_as_logical_x(const PauliString& p, double tol) const {
  const StateVector p0 = apply_to_state(p, zero_);
  const StateVector p1 = apply_to_state(p, one_);
  return std::abs(std::abs(one_.inner(p0)) - 1.0) <= tol &&
         std::abs(std::abs(zero_.inner(p1)) - 1.0) <= tol;
}

const CodeSpace& shor_code() {
  static const CodeSpace code;
  return code;
}

KLReport kl_check(const CodeSpace& code, const std::vector<PauliString>& errors, double tol) {
  const auto count = static_cast<Eigen::Index>(errors.size());
  KLReport report;
  report.chi = CMatrix::Zero(count, count);
  const StateVector& zero = code.logical_zero();
  const StateVector& one = code.logical_one();
  for (Eigen::Index i = 0; i < count; ++i) {
    for (Eigen::Index j = 0; j < count; ++j) {
      const PauliString op = errors[i].dagger() * errors[j];
      const StateVector op0 = apply_to_state(op, zero);
      const StateVector op1 = apply_to_state(op, one);
      // P_c A P_c restricted to the code space.
      const Complex m00 = zero.inner(op0), m01 = zero.inner(op1);
      const Complex m10 = one.inner(op0), m11 = one.inner(op1);
      const Complex c = 0.5 * (m00 + m11);
      const double residual = std::max({std::abs(m00 - c), std::abs(m11 - c),
                                        std::abs(m01), std::abs(m10)});
      if (residual <= tol) {
        report.chi(i, j) = c;
      } else {
        report.violations.push_back({static_cast<int>(i), static_cast<int>(j), residual});
      }
    }
  }
  return report;
}

std::vector<PauliString> paulis_up_to_weight(int num_qubits, int max_weight, int min_weight) {
  std::vector<PauliString> out;
  static constexpr char kLetters[3] = {'X', 'Y', 'Z'};
  for (int w = min_weight; w <= max_weight; ++w) {
    // Qubit combinations in lexicographic order.
    std::vector<int> qubits(w);
    for (int i = 0; i < w; ++i) qubits[i] = i + 1;
    for (;;) {
      int letter_count = 1;
      for (int i = 0; i < w; ++i) letter_count *= 3;
      for (int code = 0; code < letter_count; ++code) {
        std::vector<std::pair<int, char>> spec;
        int rest = code;
        std::vector<char> letters(w);
        for (int i = w - 1; i >= 0; --i) {
          letters[i] = kLetters[rest % 3];
          rest /= 3;
        }
        for (int i = 0; i < w; ++i) spec.emplace_back(qubits[i], letters[i]);
        out.push_back(PauliString::from_spec(spec, num_qubits));
      }
      int k = w - 1;
      while (k >= 0 && qubits[k] == num_qubits - (w - 1 - k)) --k;
      if (k < 0) break;
      ++qubits[k];
      for (int i = k + 1; i < w; ++i) qubits[i] = qubits[i - 1] + 1;
    }
  }
  return out;
}

LogicalSearchResult min_weight_logical_x(const CodeSpace& code, int max_weight) {
  if (max_weight < 1 || max_weight > 4) {
    throw std::invalid_argument("min_weight_logical_x: max_weight must be in [1, 4]");
  }
  LogicalSearchResult result;
  for (const PauliString& p : paulis_up_to_weight(kShorQubits, max_weight, 1)) {
    ++result.candidates_checked;
    if (code.acts_as_logical_x(p)) {
      result.found = p;
      return result;
    }
  }
  return result;
}

}  // namespace shorrabi
