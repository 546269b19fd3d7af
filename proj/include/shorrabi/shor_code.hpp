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
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shorrabi/pauli.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

inline constexpr int kShorQubits = 9;

/// The nine-qubit Shor code: logical basis, code projector, stabilizer
/// generators, logical operators and the syndrome decoding tables used by
/// the recovery channels.
///
/// Logical operators follow the convention where X_L = Z1 Z4 Z7 swaps the
/// logical basis. Z_L = X1 X2 X3 is a convention choice (any weight-3 X-type
/// block product works) and only enters Bloch-vector reporting.
class CodeSpace {
 public:
  CodeSpace();

  const StateVector& logical_zero() const { return zero_; }
  const StateVector& logical_one() const { return one_; }
  const CMatrix& projector() const { return projector_; }

  /// Z1Z2, Z2Z3, Z4Z5, Z5Z6, Z7Z8, Z8Z9.
  const std::vector<PauliString>& bit_stabilizers() const { return bit_gens_; }
  /// X1..X6 and X4..X9.
  const std::vector<PauliString>& phase_stabilizers() const { return phase_gens_; }

  const PauliString& logical_x() const { return logical_x_; }
  const PauliString& logical_y() const { return logical_y_; }
  const PauliString& logical_z() const { return logical_z_; }

  /// a|0_L> + b|1_L>, normalized.
  StateVector logical_state(Complex a, Complex b) const;

  /// |P_c psi|^2 and tr(P_c rho).
  double code_weight(const StateVector& psi) const;
  double code_weight(const DensityMatrix& rho) const;

  /// P_c rho P_c as the 2x2 matrix <i_L|rho|j_L>.
  Eigen::Matrix2cd logical_block(const DensityMatrix& rho) const;

  /// Logical Bloch vector (x, y, z) of P_c rho P_c / tr(P_c rho).
  std::array<double, 3> logical_bloch(const DensityMatrix& rho) const;

  /// True when P maps |0_L> to a unit multiple of |1_L> and vice versa.
  bool acts_as_logical_x(const PauliString& p, double tol = 1e-10) const;

  // Bit-flip syndrome: six bits, bit j set when bit_stabilizers()[j] has
  // eigenvalue -1 on the basis state. Decoded per block by majority.
  uint16_t bit_syndrome(uint32_t basis_index) const { return bit_syndrome_[basis_index]; }
  const std::vector<uint16_t>& bit_syndrome_table() const { return bit_syndrome_; }
  /// X mask undoing the single flip each bit syndrome points to.
  const std::vector<uint32_t>& bit_corrections() const { return bit_corrections_; }
  /// Qubits (1-based) flagged by a bit syndrome, at most one per block.
  std::vector<int> bit_syndrome_qubits(uint16_t syndrome) const;

  // Phase syndrome: bit 0 for X1..X6, bit 1 for X4..X9.
  /// Block (1, 2, 3) pointed to by a phase syndrome, 0 for the trivial one.
  static int phase_syndrome_block(uint16_t syndrome);
  /// Z on the first qubit of `block` (Z1, Z4, Z7); a phase flip anywhere in
  /// the block is equivalent to it modulo the stabilizer.
  PauliString phase_block_representative(int block) const;

 private:
  StateVector zero_;
  StateVector one_;
  CMatrix projector_;
  std::vector<PauliString> bit_gens_;
  std::vector<PauliString> phase_gens_;
  PauliString logical_x_;
  PauliString logical_y_;
  PauliString logical_z_;
  std::vector<uint16_t> bit_syndrome_;
  std::vector<uint32_t> bit_corrections_;
};

/// Shared immutable instance.
const CodeSpace& shor_code();

/// Knill-Laflamme check over an error set.
struct KLReport {
  /// chi(i, j) for the pair (E_i, E_j) with P_c E_i^dagger E_j P_c = chi P_c.
  /// Entries for violating pairs are left at zero.
  CMatrix chi;
  struct Violation {
    int i;
    int j;
    double residual;
  };
  std::vector<Violation> violations;
};

KLReport kl_check(const CodeSpace& code, const std::vector<PauliString>& errors,
                  double tol = 1e-10);

/// Every Pauli on `num_qubits` qubits with weight in [min_weight, max_weight],
/// ordered by weight, then qubit combination, then letters X < Y < Z.
std::vector<PauliString> paulis_up_to_weight(int num_qubits, int max_weight,
                                             int min_weight = 0);

struct LogicalSearchResult {
  std::optional<PauliString> found;
  int candidates_checked = 0;
};

/// Lowest-weight Pauli acting as X_L, searching weights 1..max_weight (<= 4).
LogicalSearchResult min_weight_logical_x(const CodeSpace& code, int max_weight);

}  // namespace shorrabi
