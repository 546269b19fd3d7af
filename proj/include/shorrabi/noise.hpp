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

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

/// Depolarizing noise of rate epsilon, applied as a product of single-qubit
/// channels at the end of each of N equal subintervals.
struct NoiseParams {
  double epsilon = 0.0;
  int N = 256;

  void validate() const;
};

/// Largest per-step error probability epsilon * dt the first-order channel
/// accepts.
inline constexpr double kMaxStepProbability = 0.1;

/// prod_i E^(i): (1 - p) rho + (p/3) sum_a s_a^(i) rho s_a^(i) on every
/// qubit, with p = epsilon_dt in [0, 0.1].
DensityMatrix depolarize_step(const DensityMatrix& rho, double epsilon_dt);

/// One noisy subinterval in place: rho <- D[U rho U^dagger].
class NoisyStep {
 public:
  NoisyStep(const DiagonalHamiltonian& h, double dt, double epsilon);
  void apply(CMatrix& rho) const;
  void apply_unitary(CMatrix& rho) const;
  void apply_noise(CMatrix& rho) const;
  /// Only touch entries rho(a, a ^ d) for d in `classes` (see
  /// kernels::xor_classes); the caller guarantees all others are zero.
  void restrict_to(std::vector<uint32_t> classes);
  double dt() const { return dt_; }
  double probability() const { return p_; }

 private:
  CVector u_;
  double dt_;
  double p_;
  int num_qubits_;
  std::vector<uint32_t> classes_;
  bool restricted_ = false;
};

/// XOR classes worth restricting the kernels to, or empty when the pattern
/// is too dense for that to pay off.
std::vector<uint32_t> sparse_classes(const CMatrix& rho, std::span<const uint32_t> closure_masks = {});

/// Splits (0, t] into np.N subintervals; each is unitary evolution by H
/// followed by the nine-qubit depolarizing channel.
DensityMatrix evolve_noisy(const DensityMatrix& rho0, double t, const DiagonalHamiltonian& h,
                           const NoiseParams& np);

struct TrajectoryEvent {
  double time;
  int step;    // 1-based subinterval whose end carries the event
  int qubit;   // 1-based
  char letter; // 'X', 'Y' or 'Z'
};

/// One stochastic unraveling of evolve_noisy. Events are ordered by
/// (step, qubit); several qubits can fail at the same subinterval end, so
/// times are non-decreasing and (time, qubit) is strictly increasing.
struct TrajectoryRecord {
  uint64_t seed;
  uint64_t index;
  std::vector<TrajectoryEvent> events;
  StateVector final_state;
};

/// Each qubit suffers X, Y or Z with probability epsilon*dt/3 each at the end
/// of every subinterval. Deterministic in (seed, index).
TrajectoryRecord sample_trajectory(const StateVector& psi0, double t, const DiagonalHamiltonian& h,
                                   const NoiseParams& np, uint64_t seed, uint64_t index = 0);

struct EnsembleSummary {
  struct Row {
    uint64_t index;
    int event_count;
    double final_fidelity;  // |<noiseless|final>|^2
  };
  uint64_t seed = 0;
  std::vector<Row> rows;
  double mean_events = 0.0;
  double stderr_events = 0.0;
  /// Ensemble-averaged density matrix.
  DensityMatrix average = DensityMatrix::maximally_mixed(1);
};

/// Runs `count` trajectories (OpenMP across trajectories). The averaged
/// density matrix is independent of thread count: trajectories are grouped
/// by event list and reduced in a fixed order.
EnsembleSummary run_trajectory_ensemble(const StateVector& psi0, double t,
                                        const DiagonalHamiltonian& h, const NoiseParams& np,
                                        uint64_t seed, int count);

/// CSV with header "seed,trajectory,event_count,final_fidelity".
void write_ensemble_csv(std::ostream& os, const EnsembleSummary& summary);

}  // namespace shorrabi
