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
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "shorrabi/hamiltonian.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/pauli.hpp"
#include "shorrabi/qec.hpp"
#include "shorrabi/state.hpp"

namespace shorrabi {

/// Timing of the error-correction sequence: bit-flip QEC every nu = tau / n
/// and full QEC at every t_m = m tau.
struct SequenceSchedule {
  double tau = 0.0;
  int n = 1;
  int total_periods = 1;
  /// Naive mode: phase QEC every mu and nothing else.
  std::optional<double> mu;
  /// Applied just before QEC at every t_m. A single period of free
  /// evolution produces the parity factor, and it commutes with H, so
  /// undoing it each period is what keeps the odd-m states of the
  /// uninterrupted evolution in the code space.
  std::optional<PauliString> precorrection;
  /// Irregular bit-QEC instants inside (0, tau), repeated every period.
  /// Replaces the regular grid when non-empty.
  std::vector<double> boundaries;
  /// At a QEC instant the interval's last noise substep acts before the
  /// correction (default) or right after it.
  bool noise_before_qec = true;

  double nu() const { return tau / n; }
  /// Regular schedule with tau taken from the parameters.
  static SequenceSchedule regular(const SystemParams& p, int n, int total_periods);
  void validate() const;
};

enum class SampleStage { Substep, PreQec, PostQec };

std::string to_string(SampleStage stage);

struct SequenceSample {
  double t;
  SampleStage stage;
  /// m at a full-QEC instant t_m, -1 elsewhere.
  int period_index;
  double p0l;             // <0_L| rho |0_L>
  double code_weight;     // tr(P_c rho)
  double distance_to_noiseless = -1.0;   // trace distance to rho_H(t); -1 if skipped
  double rabi_fidelity = -1.0;           // tr(rho R rho0 R^dag), R = e^{i omega t X_L}
  double multi_error_probability = -1.0; // bit syndromes flagging >= 2 blocks
};

struct SequenceOptions {
  /// false runs the same noisy evolution with every QEC step skipped.
  bool correct = true;
  /// Emit a cheap (p0l, code weight) sample after every noise substep.
  bool sample_substeps = false;
  /// Compute the full metrics at boundaries.
  bool full_metrics = true;
  /// Called with every boundary sample and the state it describes.
  std::function<void(const SequenceSample&, const DensityMatrix&)> observer;
};

struct SequenceResult {
  std::vector<SequenceSample> samples;
  DensityMatrix final_state = DensityMatrix::maximally_mixed(1);
};

/// Runs the sequence from rho0 (which must lie in the code space) for
/// total_periods * tau. Each interval between boundaries is split into
/// np.N noisy subintervals. Ordering at a boundary: the interval's final
/// noise substep, then (at t_m) the pre-correction, then bit QEC, then
/// (at t_m) phase QEC. Boundary samples are taken before and after the QEC
/// step.
SequenceResult run_sequence(const DensityMatrix& rho0, const SystemParams& params,
                            const NoiseParams& np, const SequenceSchedule& sched,
                            const SequenceOptions& options = {});

struct RationalApproximant {
  long long numerator;
  long long denominator;
  double error;    // |k - p/q|
  double horizon;  // 1 / (J |k - p/q|), infinite when exact
};

/// Result of reducing k to integers with a rescaled J.
struct CouplingNormalization {
  /// All k_r rational within the tolerance.
  bool exact = true;
  double J_prime = 0.0;
  std::array<long long, 3> k_prime{};
  /// J' = J / kappa.
  double kappa = 1.0;
  /// Continued-fraction convergents per component, up to the denominator
  /// limit; the last one is the approximant used for k_prime.
  std::array<std::vector<RationalApproximant>, 3> convergents;
  /// min_r 1/(J |k_r - k_r*|); infinite when exact.
  double horizon = 0.0;
  std::vector<std::string> warnings;
};

/// Scales k to coprime integers: J' k' = J k. Components that are not
/// rational with denominator <= max_denominator (within tol) are replaced
/// by their best convergent and the validity horizon is reported. Warns
/// when J' is not large against omega.
CouplingNormalization normalize_couplings(const std::array<double, 3>& k, double J,
                                          double omega, double tol = 1e-9,
                                          long long max_denominator = 1000);

/// Continued-fraction convergents of x with denominators <= max_denominator.
std::vector<RationalApproximant> convergents(double x, double J, long long max_denominator);

}  // namespace shorrabi
