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

#include "shorrabi/noise.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>

#include "shorrabi/kernels.hpp"
#include "shorrabi/pauli.hpp"
#include "shorrabi/rng.hpp"

namespace shorrabi {

void NoiseParams::validate() const {
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("noise: epsilon must be finite and >= 0");
  }
  if (N < 1) throw std::invalid_argument("noise: N must be >= 1");
}

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= kMaxStepProbability)) {
    throw std::invalid_argument("noise: epsilon*dt = " + std::to_string(p) +
                                " outside [0, 0.1]; increase N");
  }
}

}  // namespace

DensityMatrix depolarize_step(const DensityMatrix& rho, double epsilon_dt) {
  check_probability(epsilon_dt);
  CMatrix m = rho.matrix();
  kernels::parallel::depolarize_all(m, rho.num_qubits(), epsilon_dt);
  return DensityMatrix::unchecked(std::move(m));
}

NoisyStep::NoisyStep(const DiagonalHamiltonian& h, double dt, double epsilon)
    : u_(h.propagator(dt)), dt_(dt), p_(epsilon * dt), num_qubits_(h.num_qubits()) {
  check_probability(p_);
}

void NoisyStep::apply(CMatrix& rho) const {
  apply_unitary(rho);
  apply_noise(rho);
}

void NoisyStep::apply_unitary(CMatrix& rho) const {
  if (restricted_) {
    kernels::parallel::conjugate_diagonal_classes(rho, u_, classes_);
  } else {
    kernels::parallel::conjugate_diagonal(rho, u_);
  }
}

void NoisyStep::apply_noise(CMatrix& rho) const {
  if (p_ <= 0.0) return;
  if (restricted_) {
    kernels::parallel::depolarize_all_classes(rho, num_qubits_, p_, classes_);
  } else {
    kernels::parallel::depolarize_all(rho, num_qubits_, p_);
  }
}

void NoisyStep::restrict_to(std::vector<uint32_t> classes) {
  classes_ = std::move(classes);
  restricted_ = true;
}

std::vector<uint32_t> sparse_classes(const CMatrix& rho, std::span<const uint32_t> closure_masks) {
  auto classes = kernels::close_classes(kernels::xor_classes(rho), closure_masks);
  if (static_cast<Eigen::Index>(classes.size()) * 4 > rho.rows()) return {};
  return classes;
}

DensityMatrix evolve_noisy(const DensityMatrix& rho0, double t, const DiagonalHamiltonian& h,
                           const NoiseParams& np) {
  np.validate();
  if (rho0.num_qubits() != h.num_qubits()) {
    throw std::invalid_argument("evolve_noisy: qubit count mismatch");
  }
  if (t < 0.0) throw std::invalid_argument("evolve_noisy: negative time");
  NoisyStep step(h, t / np.N, np.epsilon);
  CMatrix m = rho0.matrix();
  if (auto classes = sparse_classes(m); !classes.empty()) step.restrict_to(std::move(classes));
  for (int j = 0; j < np.N; ++j) step.apply(m);
  return DensityMatrix::unchecked(std::move(m));
}

namespace {

void apply_phases(CVector& v, const Eigen::VectorXd& energies, double dt) {
  if (dt == 0.0) return;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = -energies[i] * dt;
    v[i] *= Complex(std::cos(a), std::sin(a));
  }
}

}  // namespace

TrajectoryRecord sample_trajectory(const StateVector& psi0, double t, const DiagonalHamiltonian& h,
                                   const NoiseParams& np, uint64_t seed, uint64_t index) {
  np.validate();
  const int n = h.num_qubits();
  if (psi0.num_qubits() != n) throw std::invalid_argument("sample_trajectory: qubit count mismatch");
  const double dt = t / np.N;
  const double p = np.epsilon * dt;
  check_probability(p);

  const CounterRng rng(seed);
  TrajectoryRecord rec{seed, index, {}, psi0};
  CVector v = psi0.amplitudes();
  int last_step = 0;
  for (int j = 1; j <= np.N; ++j) {
    bool flushed = false;
    for (int q = 1; q <= n; ++q) {
      const double u = rng.uniform(index, static_cast<uint64_t>(j), static_cast<uint64_t>(q));
      if (u >= p) continue;
      const int which = std::min(2, static_cast<int>(3.0 * u / p));
      const char letter = "XYZ"[which];
      if (!flushed) {
        apply_phases(v, h.energies(), dt * (j - last_step));
        last_step = j;
        flushed = true;
      }
      v = apply_to_state(PauliString::from_spec({{q, letter}}, n), StateVector::normalized(v))
              .amplitudes();
      rec.events.push_back({dt * j, j, q, letter});
    }
  }
  apply_phases(v, h.energies(), dt * (np.N - last_step));
  rec.final_state = StateVector::normalized(std::move(v));
  return rec;
}

EnsembleSummary run_trajectory_ensemble(const StateVector& psi0, double t,
                                        const DiagonalHamiltonian& h, const NoiseParams& np,
                                        uint64_t seed, int count) {
  if (count < 1) throw std::invalid_argument("run_trajectory_ensemble: count must be >= 1");
  const StateVector reference = evolve(h, psi0, t);

  std::vector<TrajectoryRecord> records(static_cast<size_t>(count),
                                        TrajectoryRecord{seed, 0, {}, psi0});
  std::vector<std::exception_ptr> errors(static_cast<size_t>(count));
#pragma omp parallel for schedule(dynamic, 8)
  for (int i = 0; i < count; ++i) {
    try {
      records[static_cast<size_t>(i)] =
          sample_trajectory(psi0, t, h, np, seed, static_cast<uint64_t>(i));
    } catch (...) {
      errors[static_cast<size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  EnsembleSummary out;
  out.seed = seed;
  using Key = std::vector<std::tuple<int, int, char>>;
  std::map<Key, std::pair<int, size_t>> groups;  // key -> (multiplicity, first record)
  double sum = 0.0, sum2 = 0.0;
  for (size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    const int ev = static_cast<int>(r.events.size());
    const double f = std::norm(reference.inner(r.final_state));
    out.rows.push_back({r.index, ev, f});
    sum += ev;
    sum2 += static_cast<double>(ev) * ev;
    Key key;
    key.reserve(r.events.size());
    for (const auto& e : r.events) key.emplace_back(e.step, e.qubit, e.letter);
    auto [it, inserted] = groups.try_emplace(std::move(key), 0, i);
    ++it->second.first;
  }
  const double k = count;
  out.mean_events = sum / k;
  out.stderr_events = count > 1 ? std::sqrt(std::max(0.0, (sum2 / k - out.mean_events * out.mean_events) / (k - 1))) : 0.0;

  const Eigen::Index dim = psi0.dim();
  CMatrix cols(dim, static_cast<Eigen::Index>(groups.size()));
  Eigen::Index c = 0;
  for (const auto& [key, val] : groups) {
    cols.col(c++) = std::sqrt(val.first / k) * records[val.second].final_state.amplitudes();
  }
  CMatrix rho = cols * cols.adjoint();
  out.average = DensityMatrix::unchecked(std::move(rho));
  return out;
}

void write_ensemble_csv(std::ostream& os, const EnsembleSummary& summary) {
  os << "seed,trajectory,event_count,final_fidelity\n";
  os.precision(17);
  for (const auto& r : summary.rows) {
    os << summary.seed << ',' << r.index << ',' << r.event_count << ',' << r.final_fidelity << '\n';
  }
}

}  // namespace shorrabi
