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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace shorrabi {

class StateVector;

/// A signed tensor product of single-qubit Paulis on up to 12 qubits.
///
/// Stored in symplectic form: one X mask and one Z mask, plus an overall
/// phase i^k. A qubit carries Y when both of its bits are set, and Y is
/// taken to be the Hermitian Pauli Y = iXZ, so the stored phase multiplies
/// Hermitian letters.
///
/// Qubits are labelled 1..n in the public interface. Internally qubit q
/// occupies bit (n - q) of a computational basis index, so qubit 1 is the
/// most significant bit of |q1 q2 ... qn>.
class PauliString {
 public:
  static constexpr int kMaxQubits = 12;

  /// Identity on `num_qubits` qubits with phase +1.
  explicit PauliString(int num_qubits);

  /// Tensor product of the listed (qubit, letter) factors with phase +1.
  /// Throws std::invalid_argument on duplicate or out-of-range qubits.
  static PauliString from_spec(const std::vector<std::pair<int, char>>& spec,
                               int num_qubits);

  /// Parses text like "Z1 Z4 Z7", "-X2", "-iY3 Z4" or "I".
  static PauliString parse(std::string_view text, int num_qubits);

  /// Builds directly from basis-index masks; `phase_power` is k in i^k.
  static PauliString from_masks(int num_qubits, uint32_t x_mask,
                                uint32_t z_mask, int phase_power = 0);

  int num_qubits() const { return n_; }
  uint32_t x_mask() const { return x_; }
  uint32_t z_mask() const { return z_; }
  int phase_power() const { return phase_; }
  std::complex<double> phase() const;

  /// Basis-index bit for a 1-based qubit label.
  uint32_t qubit_bit(int qubit) const;

  char letter(int qubit) const;
  int weight() const;
  bool is_identity_up_to_phase() const { return x_ == 0 && z_ == 0; }
  /// True when the operator is Hermitian (phase +1 or -1).
  bool is_hermitian() const { return (phase_ & 1) == 0; }

  PauliString operator*(const PauliString& rhs) const;
  PauliString with_phase_power(int k) const;
  PauliString dagger() const;

  bool operator==(const PauliString& rhs) const = default;

  /// Symplectic test of PQ == QP.
  bool commutes(const PauliString& rhs) const;

  /// Action on a computational basis state: P|b> = coef * |target>.
  std::pair<uint32_t, std::complex<double>> act_on_basis(uint32_t b) const;

  /// Sign (+1 or -1) picked up by |b> under the Z part alone.
  int z_sign(uint32_t b) const;

  /// Text form accepted by parse(); round trips exactly.
  std::string str() const;

 private:
  PauliString(int n, uint32_t x, uint32_t z, int phase);
  void check_same_size(const PauliString& rhs) const;

  int n_;
  uint32_t x_ = 0;
  uint32_t z_ = 0;
  int phase_ = 0;
};

/// Exact action of P on a state vector of matching dimension.
StateVector apply_to_state(const PauliString& p, const StateVector& psi);

/// Dense 2^n x 2^n matrix of P, row-major. Used as a test oracle.
std::vector<std::complex<double>> dense_matrix(const PauliString& p);

}  // namespace shorrabi
