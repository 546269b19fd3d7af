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

enum class QecKind { Bit, Phase, Both };

/// Parses "bit", "phase" or "both".
QecKind parse_qec_kind(const std::string& text);
std::string to_string(QecKind kind);

/// One outcome of a syndrome measurement.
struct SyndromeBranch {
  QecKind kind;  // Bit or Phase
  uint16_t syndrome;
  std::string label;  // "none", "bit-flip qubit 3", "bit-flip qubits 1,5", "phase block 2"
  double probability;
  /// Pi_s rho Pi_s / probability (zero matrix when probability == 0).
  DensityMatrix post_state;
  /// Pauli applied by the recovery for this outcome.
  PauliString recovery;
};

/// Projective measurement of the six Z-type stabilizers. Returns every
/// outcome with nonzero probability, ordered by syndrome.
std::vector<SyndromeBranch> measure_bit_syndrome(const DensityMatrix& rho);

/// Projective measurement of X1..X6 and X4..X9. Returns all four outcomes.
std::vector<SyndromeBranch> measure_phase_syndrome(const DensityMatrix& rho);

/// R rho R^dagger for the branch's recovery Pauli, applied to its post-state.
DensityMatrix recover(const SyndromeBranch& branch);

/// Outcome-averaged measure-and-correct. Both = Bit followed by Phase.
DensityMatrix qec_channel(const DensityMatrix& rho, QecKind kind);

/// Probability that the bit syndrome flags flips in two or more blocks, i.e.
/// at least two bit-flip errors; such branches count as logical-failure
/// risks in reports even though per-block decoding still runs.
double multi_error_probability(const DensityMatrix& rho);

/// Pauli P with e^{-i H_J tau} = phase * P on the code space, where
/// H_J = -J (k1 Z1Z4 + k4 Z4Z7 + k7 Z7Z1) and tau = pi/(2J), found by
/// evaluating the propagator on code states. Empty when it acts trivially
/// (all k odd or all even). Undoing it at every multiple of tau keeps the
/// sequence in the code space for k with mixed parity.
///
/// Throws std::invalid_argument when no such Pauli exists (non-integer k).
std::optional<PauliString> parity_precorrection_for(const std::array<double, 3>& k);

}  // namespace shorrabi
