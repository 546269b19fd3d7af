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

// Dense in-place kernels on 2^n x 2^n density matrices.
//
// Every kernel exists twice with identical signatures: a plain serial
// reference in `kernels::serial` and an OpenMP version in
// `kernels::parallel`. The library calls the parallel versions. Tests pin
// them to the serial ones and bench/kernels_bench.cpp compares their speed.
// Both perform the same floating-point operations per element, so results
// agree bit for bit at any thread count.

#include <cstdint>
#include <span>
#include <vector>

#include "shorrabi/pauli.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi::kernels {

namespace serial {

// rho_ab *= u_a * conj(u_b)
void conjugate_diagonal(CMatrix& rho, const CVector& u);

// Single-qubit depolarizing map with error probability p on basis bit `bit`:
// (1 - p) rho + (p / 3) sum_a s_a rho s_a.
void depolarize_bit(CMatrix& rho, uint32_t bit, double p);

// depolarize_bit on every qubit in turn.
void depolarize_all(CMatrix& rho, int num_qubits, double p);

// out = P rho P^dagger
void conjugate_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// out = P rho
void left_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// out = rho P
void right_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// Outcome-averaged measure-and-correct for a syndrome that is diagonal in the
// computational basis: out = sum_s X(c_s) Pi_s rho Pi_s X(c_s), where Pi_s
// keeps basis states with syndrome[b] == s and c_s = correction[s] is an X
// mask.
void diagonal_syndrome_correct(const CMatrix& rho, std::span<const uint16_t> syndrome,
                               std::span<const uint32_t> correction, CMatrix& out);

// Variants touching only the entries rho(a, a ^ d) for d in `classes`. All
// other entries must be zero; every kernel above maps them to zero, so for
// states whose nonzero pattern is a few XOR classes these give the same
// result at a fraction of the cost.
void conjugate_diagonal_classes(CMatrix& rho, const CVector& u, std::span<const uint32_t> classes);
void depolarize_all_classes(CMatrix& rho, int num_qubits, double p,
                            std::span<const uint32_t> classes);
// In place. Also requires the classes to be unions of syndrome-preserving
// pairs, which holds for any X-mask correction table.
void diagonal_syndrome_correct_classes(CMatrix& rho, std::span<const uint16_t> syndrome,
                                       std::span<const uint32_t> correction,
                                       std::span<const uint32_t> classes);

}  // namespace serial

namespace parallel {

// rho_ab *= u_a * conj(u_b)
void conjugate_diagonal(CMatrix& rho, const CVector& u);

// Single-qubit depolarizing map with error probability p on basis bit `bit`:
// (1 - p) rho + (p / 3) sum_a s_a rho s_a.
void depolarize_bit(CMatrix& rho, uint32_t bit, double p);

// depolarize_bit on every qubit in turn.
void depolarize_all(CMatrix& rho, int num_qubits, double p);

// out = P rho P^dagger
void conjugate_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// out = P rho
void left_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// out = rho P
void right_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out);

// Outcome-averaged measure-and-correct for a syndrome that is diagonal in the
// computational basis: out = sum_s X(c_s) Pi_s rho Pi_s X(c_s), where Pi_s
// keeps basis states with syndrome[b] == s and c_s = correction[s] is an X
// mask.
void diagonal_syndrome_correct(const CMatrix& rho, std::span<const uint16_t> syndrome,
                               std::span<const uint32_t> correction, CMatrix& out);

// Variants touching only the entries rho(a, a ^ d) for d in `classes`. All
// other entries must be zero; every kernel above maps them to zero, so for
// states whose nonzero pattern is a few XOR classes these give the same
// result at a fraction of the cost.
void conjugate_diagonal_classes(CMatrix& rho, const CVector& u, std::span<const uint32_t> classes);
void depolarize_all_classes(CMatrix& rho, int num_qubits, double p,
                            std::span<const uint32_t> classes);
// In place. Also requires the classes to be unions of syndrome-preserving
// pairs, which holds for any X-mask correction table.
void diagonal_syndrome_correct_classes(CMatrix& rho, std::span<const uint16_t> syndrome,
                                       std::span<const uint32_t> correction,
                                       std::span<const uint32_t> classes);

}  // namespace parallel

// Distinct a ^ b over the nonzero entries rho(a, b), ascending.
std::vector<uint32_t> xor_classes(const CMatrix& rho);

// Closure of `classes` under XOR with every mask.
std::vector<uint32_t> close_classes(std::vector<uint32_t> classes,
                                    std::span<const uint32_t> masks);

// Threads the parallel kernels may use (1 when built without OpenMP).
int max_threads();

}  // namespace shorrabi::kernels
