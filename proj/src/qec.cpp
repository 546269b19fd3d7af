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

#include <cmath>
#include <stdexcept>

#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/kernels.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

namespace kp = kernels::parallel;

QecKind parse_qec_kind(const std::string& text) {
  if (text == "bit") return QecKind::Bit;
  if (text == "phase") return QecKind::Phase;
  if (text == "both") return QecKind::Both;
  throw std::invalid_argument("unknown QEC kind '" + text + "' (bit|phase|both)");
}

std::string to_string(QecKind kind) {
  switch (kind) {
    case QecKind::Bit:
      return "bit";
    case QecKind::Phase:
      return "phase";
    case QecKind::Both:
      return "both";
  }
  return "?";
}

namespace {

std::string bit_label(const PauliString& p) {
  std::vector<int> qubits;
  for (int q = 1; q <= p.num_qubits(); ++q) {
    if (p.letter(q) != 'I') qubits.push_back(q);
  }
  if (qubits.empty()) return "none";
  std::string s = qubits.size() == 1 ? "bit-flip qubit " : "bit-flip qubits ";
  for (size_t i = 0; i < qubits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(qubits[i]);
  }
  return s;
}

std::string phase_label(uint16_t syndrome) {
  const int block = CodeSpace::phase_syndrome_block(syndrome);
  return block == 0 ? "none" : "phase block " + std::to_string(block);
}

void check_nine(const DensityMatrix& rho) {
  if (rho.num_qubits() != kShorQubits) {
    throw std::invalid_argument("QEC acts on nine-qubit states");
  }
}

// Pi_s rho Pi_s for the phase syndrome s, one generator at a time:
// (1 + sG)/2 rho (1 + sG)/2 = (rho + sG rho + s rho G + G rho G) / 4.
CMatrix phase_project(const CMatrix& rho, uint16_t syndrome) {
  const auto& gens = shor_code().phase_stabilizers();
  CMatrix cur = rho;
  CMatrix left(rho.rows(), rho.cols()), right(rho.rows(), rho.cols()),
      both(rho.rows(), rho.cols());
  for (size_t j = 0; j < gens.size(); ++j) {
    const double s = ((syndrome >> j) & 1) ? -1.0 : 1.0;
    kp::left_multiply_pauli(cur, gens[j], left);
    kp::right_multiply_pauli(cur, gens[j], right);
    kp::conjugate_pauli(cur, gens[j], both);
    cur = 0.25 * (cur + s * (left + right) + both);
  }
  return cur;
}

PauliString phase_recovery(uint16_t syndrome) {
  const int block = CodeSpace::phase_syndrome_block(syndrome);
  return block == 0 ? PauliString(kShorQubits) : shor_code().phase_block_representative(block);
}

DensityMatrix normalized_or_zero(CMatrix m, double p) {
  if (p > 0.0) m /= p;
  else m.setZero();
  return DensityMatrix::unchecked(std::move(m));
}

}  // namespace

std::vector<SyndromeBranch> measure_bit_syndrome(const DensityMatrix& rho) {
  check_nine(rho);
  const CodeSpace& code = shor_code();
  const auto& table = code.bit_syndrome_table();
  const Eigen::Index dim = rho.dim();
  std::array<double, 64> prob{};
  for (Eigen::Index b = 0; b < dim; ++b) prob[table[b]] += rho(b, b).real();

  std::vector<SyndromeBranch> out;
  for (uint16_t s = 0; s < 64; ++s) {
    if (!(prob[s] > 0.0)) continue;
    CMatrix m = CMatrix::Zero(dim, dim);
    for (Eigen::Index c = 0; c < dim; ++c) {
      if (table[c] != s) continue;
      for (Eigen::Index r = 0; r < dim; ++r) {
        if (table[r] == s) m(r, c) = rho(r, c);
      }
    }
    PauliString rec = PauliString::from_masks(kShorQubits, code.bit_corrections()[s], 0);
    out.push_back({QecKind::Bit, s, bit_label(rec), prob[s],
                   normalized_or_zero(std::move(m), prob[s]), rec});
  }
  return out;
}

std::vector<SyndromeBranch> measure_phase_syndrome(const DensityMatrix& rho) {
  check_nine(rho);
  std::vector<SyndromeBranch> out;
  for (uint16_t s = 0; s < 4; ++s) {
    CMatrix m = phase_project(rho.matrix(), s);
    const double p = std::max(0.0, m.trace().real());
    PauliString rec = phase_recovery(s);
    out.push_back({QecKind::Phase, s, phase_label(s), p, normalized_or_zero(std::move(m), p), rec});
  }
  return out;
}

DensityMatrix recover(const SyndromeBranch& branch) {
  CMatrix out(branch.post_state.dim(), branch.post_state.dim());
  kp::conjugate_pauli(branch.post_state.matrix(), branch.recovery, out);
  return DensityMatrix::unchecked(std::move(out));
}

namespace {

CMatrix bit_channel(const CMatrix& rho) {
  const CodeSpace& code = shor_code();
  CMatrix out(rho.rows(), rho.cols());
  kp::diagonal_syndrome_correct(rho, code.bit_syndrome_table(), code.bit_corrections(), out);
  return out;
}

CMatrix phase_channel(const CMatrix& rho) {
  CMatrix acc = CMatrix::Zero(rho.rows(), rho.cols());
  CMatrix tmp(rho.rows(), rho.cols());
  for (uint16_t s = 0; s < 4; ++s) {
    CMatrix proj = phase_project(rho, s);
    kp::conjugate_pauli(proj, phase_recovery(s), tmp);
    acc += tmp;
  }
  return acc;
}

}  // namespace

DensityMatrix qec_channel(const DensityMatrix& rho, QecKind kind) {
  check_nine(rho);
  switch (kind) {
    case QecKind::Bit:
      return DensityMatrix::unchecked(bit_channel(rho.matrix()));
    case QecKind::Phase:
      return DensityMatrix::unchecked(phase_channel(rho.matrix()));
    case QecKind::Both:
      return DensityMatrix::unchecked(phase_channel(bit_channel(rho.matrix())));
  }
  throw std::invalid_argument("qec_channel: bad kind");
}

double multi_error_probability(const DensityMatrix& rho) {
  check_nine(rho);
  const auto& table = shor_code().bit_syndrome_table();
  double p = 0.0;
  for (Eigen::Index b = 0; b < rho.dim(); ++b) {
    const uint16_t s = table[b];
    const int blocks = ((s & 3) != 0) + ((s & 12) != 0) + ((s & 48) != 0);
    if (blocks >= 2) p += rho(b, b).real();
  }
  return p;
}

std::optional<PauliString> parity_precorrection_for(const std::array<double, 3>& k) {
  SystemParams p;
  p.omega = 0.0;
  p.J = 1.0;
  p.k = k;
  const DiagonalHamiltonian h = build_hamiltonian(p);
  const CodeSpace& code = shor_code();
  const std::array<StateVector, 2> probes{code.logical_zero(),
                                          code.logical_state(1.0, Complex(0.6, 0.8))};
  const std::array<const char*, 4> candidates{"I", "Z1 Z4", "Z4 Z7", "Z7 Z1"};
  for (const char* text : candidates) {
    const PauliString cand = PauliString::parse(text, kShorQubits);
    bool ok = true;
    for (const auto& psi : probes) {
      const StateVector evolved = evolve(h, psi, p.tau());
      const StateVector undone = apply_to_state(cand, evolved);
      if (std::abs(std::abs(psi.inner(undone)) - 1.0) > 1e-9) {
        ok = false;
        break;
      }
    }
    if (ok) {
      if (cand.is_identity_up_to_phase()) return std::nullopt;
      return cand;
    }
  }
  throw std::invalid_argument("parity_precorrection_for: k must be integers");
}

}  // namespace shorrabi
