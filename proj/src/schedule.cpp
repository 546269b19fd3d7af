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

#include "shorrabi/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "shorrabi/kernels.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

namespace kp = kernels::parallel;

SequenceSchedule SequenceSchedule::regular(const SystemParams& p, int n, int total_periods) {
  SequenceSchedule s;
  s.tau = p.tau();
  s.n = n;
  s.total_periods = total_periods;
  return s;
}

void SequenceSchedule::validate() const {
  if (!(tau > 0.0) || !std::isfinite(tau)) throw std::invalid_argument("schedule: tau must be > 0");
  if (n < 1) throw std::invalid_argument("schedule: n must be >= 1");
  if (total_periods < 0) throw std::invalid_argument("schedule: total_periods must be >= 0");
  if (mu && !(*mu > 0.0)) throw std::invalid_argument("schedule: mu must be > 0");
  for (double b : boundaries) {
    if (!(b > 0.0 && b < tau)) throw std::invalid_argument("schedule: boundaries must lie in (0, tau)");
  }
  if (precorrection && precorrection->num_qubits() != kShorQubits) {
    throw std::invalid_argument("schedule: pre-correction must act on nine qubits");
  }
}

std::string to_string(SampleStage stage) {
  switch (stage) {
    case SampleStage::Substep:
      return "substep";
    case SampleStage::PreQec:
      return "pre";
    case SampleStage::PostQec:
      return "post";
  }
  return "?";
}

namespace {

enum class Action { None, Bit, Full, Phase };

struct Boundary {
  double t;
  Action action;
  int period_index;  // m for Full
};

std::vector<Boundary> build_boundaries(const SequenceSchedule& s) {
  std::vector<Boundary> out;
  if (s.mu) {
    const double total = s.total_periods * s.tau;
    const double mu = *s.mu;
    const long count = static_cast<long>(std::floor(total / mu * (1.0 + 1e-12)));
    for (long j = 1; j <= count; ++j) out.push_back({j * mu, Action::Phase, -1});
    if (out.empty() || total - out.back().t > 1e-12 * total) out.push_back({total, Action::None, -1});
    return out;
  }
  std::vector<double> inner = s.boundaries;
  if (inner.empty()) {
    for (int j = 1; j < s.n; ++j) inner.push_back(s.tau * j / s.n);
  }
  std::sort(inner.begin(), inner.end());
  for (int m = 0; m < s.total_periods; ++m) {
    for (double b : inner) out.push_back({m * s.tau + b, Action::Bit, -1});
    out.push_back({(m + 1) * s.tau, Action::Full, m + 1});
  }
  return out;
}

double overlap(const CMatrix& rho, const CMatrix& sigma) {
  return (rho.array() * sigma.array().conjugate()).sum().real();
}

class Metrics {
 public:
  Metrics(const DensityMatrix& rho0, const DiagonalHamiltonian& h, double omega)
      : rho0_(rho0.matrix()), h_(h), omega_(omega) {
    const CodeSpace& code = shor_code();
    zero_ = code.logical_zero().amplitudes();
    const PauliString& xl = code.logical_x();
    kp::left_multiply_pauli(rho0_, xl, x_rho0_);
    kp::right_multiply_pauli(rho0_, xl, rho0_x_);
    kp::conjugate_pauli(rho0_, xl, x_rho0_x_);
  }

  SequenceSample cheap(double t, SampleStage stage, int m, const CMatrix& rho) const {
    SequenceSample s{t, stage, m, 0.0, 0.0};
    s.p0l = zero_.dot(rho * zero_).real();
    s.code_weight = shor_code().code_weight(DensityMatrix::unchecked(rho));
    return s;
  }

  SequenceSample full(double t, SampleStage stage, int m, const CMatrix& rho) const {
    SequenceSample s = cheap(t, stage, m, rho);
    CMatrix ref = rho0_;
    kp::conjugate_diagonal(ref, h_.propagator(t));
    s.distance_to_noiseless = trace_norm_hermitian(rho - ref) / 2.0;
    const double c = std::cos(omega_ * t), sn = std::sin(omega_ * t);
    const CMatrix rotated =
        c * c * rho0_ + sn * sn * x_rho0_x_ + Complex(0.0, c * sn) * (x_rho0_ - rho0_x_);
    s.rabi_fidelity = overlap(rho, rotated);
    s.multi_error_probability = multi_error_probability(DensityMatrix::unchecked(rho));
    return s;
  }

 private:
  CMatrix rho0_;
  const DiagonalHamiltonian& h_;
  double omega_;
  CVector zero_;
  CMatrix x_rho0_, rho0_x_, x_rho0_x_;
};

}  // namespace

SequenceResult run_sequence(const DensityMatrix& rho0, const SystemParams& params,
                            const NoiseParams& np, const SequenceSchedule& sched,
                            const SequenceOptions& options) {
  params.validate();
  np.validate();
  sched.validate();
  if (rho0.num_qubits() != kShorQubits) throw std::invalid_argument("run_sequence: nine qubits required");
  const CodeSpace& code = shor_code();
  if (std::abs(code.code_weight(rho0) - 1.0) > 1e-10) {
    throw std::invalid_argument("run_sequence: initial state must lie in the code space");
  }
  const DiagonalHamiltonian h = build_hamiltonian(params);
  const Metrics metrics(rho0, h, params.omega);

  SequenceResult result;
  auto emit = [&](double t, SampleStage stage, int m, const CMatrix& rho) {
    SequenceSample s = options.full_metrics ? metrics.full(t, stage, m, rho)
                                            : metrics.cheap(t, stage, m, rho);
    result.samples.push_back(s);
    if (options.observer) options.observer(s, DensityMatrix::unchecked(rho));
  };

  CMatrix rho = rho0.matrix();
  CMatrix scratch(rho.rows(), rho.cols());
  // Phase projections shift a ^ b by the X-stabilizer masks; every other
  // step keeps it, so this closure bounds the nonzero pattern for the run.
  const std::vector<uint32_t> stabilizer_masks{code.phase_stabilizers()[0].x_mask(),
                                               code.phase_stabilizers()[1].x_mask()};
  const std::vector<uint32_t> classes = sparse_classes(rho, stabilizer_masks);
  emit(0.0, SampleStage::PostQec, 0, rho);

  const bool noisy = np.epsilon > 0.0;
  const int substeps = (noisy || options.sample_substeps) ? np.N : 1;
  double t_prev = 0.0;
  for (const Boundary& b : build_boundaries(sched)) {
    const double dt = (b.t - t_prev) / substeps;
    NoisyStep step(h, dt, np.epsilon);
    if (!classes.empty()) step.restrict_to(classes);
    const bool defer_noise = !sched.noise_before_qec && b.action != Action::None;
    for (int j = 1; j <= substeps; ++j) {
      if (defer_noise && j == substeps) {
        step.apply_unitary(rho);
        break;
      }
      step.apply(rho);
      if (options.sample_substeps && j < substeps) {
        result.samples.push_back(metrics.cheap(t_prev + j * dt, SampleStage::Substep, -1, rho));
      }
    }
    t_prev = b.t;

    if (options.correct && b.action == Action::Full && sched.precorrection) {
      kp::conjugate_pauli(rho, *sched.precorrection, scratch);
      rho.swap(scratch);
    }
    emit(b.t, SampleStage::PreQec, b.period_index, rho);
    if (options.correct && b.action != Action::None) {
      const QecKind kind = b.action == Action::Bit    ? QecKind::Bit
                           : b.action == Action::Full ? QecKind::Both
                                                      : QecKind::Phase;
      if (kind == QecKind::Bit && !classes.empty()) {
        kp::diagonal_syndrome_correct_classes(rho, code.bit_syndrome_table(), code.bit_corrections(),
                                              classes);
      } else {
        rho = qec_channel(DensityMatrix::unchecked(std::move(rho)), kind).matrix();
      }
    }
    if (defer_noise) step.apply_noise(rho);
    emit(b.t, SampleStage::PostQec, b.period_index, rho);
  }
  result.final_state = DensityMatrix::unchecked(std::move(rho));
  return result;
}

std::vector<RationalApproximant> convergents(double x, double J, long long max_denominator) {
  if (!std::isfinite(x)) throw std::invalid_argument("convergents: non-finite value");
  std::vector<RationalApproximant> out;
  long long p_prev = 1, p_prev2 = 0, q_prev = 0, q_prev2 = 1;
  long double rem = x;
  for (int iter = 0; iter < 64; ++iter) {
    const long double a_ld = std::floor(rem);
    if (std::fabs(a_ld) > 1e15L) break;
    const long long a = static_cast<long long>(a_ld);
    const long long p = a * p_prev + p_prev2;
    const long long q = a * q_prev + q_prev2;
    if (q > max_denominator) break;
    const double err = std::abs(x - static_cast<double>(p) / static_cast<double>(q));
    out.push_back({p, q, err, err > 0.0 ? 1.0 / (J * err) : std::numeric_limits<double>::infinity()});
    p_prev2 = p_prev;
    p_prev = p;
    q_prev2 = q_prev;
    q_prev = q;
    const long double frac = rem - a_ld;
    if (frac < 1e-15L) break;
    rem = 1.0L / frac;
  }
  return out;
}

CouplingNormalization normalize_couplings(const std::array<double, 3>& k, double J, double omega,
                                          double tol, long long max_denominator) {
  if (!(J > 0.0)) throw std::invalid_argument("normalize_couplings: J must be > 0");
  CouplingNormalization out;
  std::array<long long, 3> num{}, den{};
  out.horizon = std::numeric_limits<double>::infinity();
  for (int r = 0; r < 3; ++r) {
    if (!(k[r] > 0.0) || !std::isfinite(k[r])) {
      throw std::invalid_argument("normalize_couplings: k must be positive");
    }
    auto conv = convergents(k[r], J, max_denominator);
    if (conv.empty()) throw std::invalid_argument("normalize_couplings: no convergent within limit");
    auto hit = std::find_if(conv.begin(), conv.end(),
                            [&](const RationalApproximant& a) { return a.error <= tol; });
    if (hit != conv.end()) {
      conv.erase(hit + 1, conv.end());
    } else {
      out.exact = false;
      out.horizon = std::min(out.horizon, conv.back().horizon);
    }
    num[r] = conv.back().numerator;
    den[r] = conv.back().denominator;
    out.convergents[r] = std::move(conv);
  }
  long long l = 1;
  for (long long d : den) l = std::lcm(l, d);
  std::array<long long, 3> scaled{};
  long long g = 0;
  for (int r = 0; r < 3; ++r) {
    scaled[r] = num[r] * (l / den[r]);
    g = std::gcd(g, scaled[r]);
  }
  for (int r = 0; r < 3; ++r) out.k_prime[r] = scaled[r] / g;
  out.kappa = static_cast<double>(l) / static_cast<double>(g);
  out.J_prime = J / out.kappa;
  if (out.J_prime <= 10.0 * omega) {
    std::ostringstream msg;
    msg << "J' = " << out.J_prime << " is not large against omega = " << omega
        << "; the discrete oscillation picture needs J' >> omega";
    out.warnings.push_back(msg.str());
  }
  if (!out.exact) {
    std::ostringstream msg;
    msg << "k is not rational within tolerance; results valid only for t << " << out.horizon;
    out.warnings.push_back(msg.str());
  }
  return out;
}

}  // namespace shorrabi
