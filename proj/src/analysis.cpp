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

#include "shorrabi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

#include "shorrabi/kernels.hpp"
#include "shorrabi/schedule.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

using std::numbers::pi;

double sinc(double x) {
  if (std::abs(x) < 1e-4) {
    const double x2 = x * x;
    return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
  }
  return std::sin(x) / x;
}

SincCoefficients sinc_coefficients(int n) {
  if (n < 1) throw std::invalid_argument("sinc_coefficients: n must be >= 1");
  const double base = 3.0 / 16.0 + sinc(4.0 * pi / n) / 16.0;
  const double delta = sinc(2.0 * pi / n) / 4.0;
  return {base + delta, base - delta};
}

std::vector<BranchRow> bit_branch_table(double eps_tau) {
  return {
      {"none", 1, 1.0 - 6.0 * eps_tau,
       "(1 - 3 eps tau) rho_H + (eps tau / 3) sum_i Z_i rho_H Z_i"},
      {"X_s", 6, 2.0 * eps_tau / 3.0, "(rho_H + Z_s rho_H Z_s) / 2"},
      {"X_r", 3, 2.0 * eps_tau / 3.0, "(rho_e^(r) + Z_r rho_e^(r) Z_r) / 2"},
  };
}

std::vector<BranchRow> phase_branch_table(int n) {
  if (n < 1) throw std::invalid_argument("phase_branch_table: n must be >= 1");
  const double s = sinc(4.0 * pi / n);
  const std::string mixed = "(a+ rho_H + a- X_L rho_H X_L) / (a+ + a-)";
  return {
      {"none", 1, 3.0 / 8.0 + s / 8.0, mixed},
      {"Z_r", 1, 3.0 / 8.0 + s / 8.0, mixed},
      {"Z_r'", 2, 1.0 / 8.0 - s / 8.0, "(rho_H + X_L rho_H X_L) / 2"},
  };
}

namespace {

void check_triangle(int r) {
  if (r != 1 && r != 4 && r != 7) throw std::invalid_argument("r must be 1, 4 or 7");
}

std::vector<Eigen::Index> support(const StateVector& psi) {
  std::vector<Eigen::Index> idx;
  for (Eigen::Index i = 0; i < psi.dim(); ++i) {
    if (psi[i] != Complex(0.0)) idx.push_back(i);
  }
  return idx;
}

Complex phase_factor(double angle) { return {std::cos(angle), std::sin(angle)}; }

// Amplitudes on `idx` of e^{2iJ Z_r X_L t'} e^{-iH(tau - 2t')} psi0.
void rho_e_integrand(const Eigen::VectorXd& energies, const PauliString& zx, const StateVector& psi0,
                     const std::vector<Eigen::Index>& idx, double J, double tau, double tp,
                     Complex* out) {
  const double theta = 2.0 * J * tp;
  for (size_t k = 0; k < idx.size(); ++k) {
    const auto b = static_cast<uint32_t>(idx[k]);
    const double angle = -energies[idx[k]] * (tau - 2.0 * tp) + theta * zx.z_sign(b);
    out[k] = phase_factor(angle) * psi0[idx[k]];
  }
}

void check_quadrature(const SystemParams& params, const StateVector& psi0, int n, int m) {
  params.validate();
  if (psi0.num_qubits() != kShorQubits) throw std::invalid_argument("nine-qubit state required");
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (m < 1) throw std::invalid_argument("quadrature_points must be >= 1");
}

}  // namespace

DensityMatrix brute_force_rho_e(const SystemParams& params, const StateVector& psi0, int r, int n,
                                int quadrature_points) {
  check_triangle(r);
  check_quadrature(params, psi0, n, quadrature_points);
  const CodeSpace& code = shor_code();
  const PauliString zx = PauliString::from_spec({{r, 'Z'}}, kShorQubits) * code.logical_x();
  const DiagonalHamiltonian h = build_hamiltonian(params);
  const double tau = params.tau();
  const double nu = tau / n;
  const auto idx = support(psi0);
  const auto s = static_cast<Eigen::Index>(idx.size());

  CMatrix cols(s, quadrature_points);
  for (int j = 0; j < quadrature_points; ++j) {
    const double tp = (j + 0.5) * nu / quadrature_points;
    rho_e_integrand(h.energies(), zx, psi0, idx, params.J, tau, tp, cols.col(j).data());
  }
  const CMatrix small = cols * cols.adjoint() / static_cast<double>(quadrature_points);
  CMatrix rho = CMatrix::Zero(psi0.dim(), psi0.dim());
  for (Eigen::Index c = 0; c < s; ++c) {
    for (Eigen::Index a = 0; a < s; ++a) rho(idx[a], idx[c]) = small(a, c);
  }
  return DensityMatrix::unchecked(std::move(rho));
}

PhaseBranchQuadrature phase_branch_quadrature(const SystemParams& params, const StateVector& psi0,
                                              int r, int n, int quadrature_points) {
  check_triangle(r);
  check_quadrature(params, psi0, n, quadrature_points);
  const CodeSpace& code = shor_code();
  const PauliString zr = PauliString::from_spec({{r, 'Z'}}, kShorQubits);
  const PauliString zx = zr * code.logical_x();
  const DiagonalHamiltonian h = build_hamiltonian(params);
  const double tau = params.tau();
  const double nu = tau / n;

  // Close the support under the X-type stabilizers so projections stay on it.
  const uint32_t g1 = code.phase_stabilizers()[0].x_mask();
  const uint32_t g2 = code.phase_stabilizers()[1].x_mask();
  const std::array<uint32_t, 4> group{0u, g1, g2, g1 ^ g2};
  std::vector<Eigen::Index> idx;
  std::unordered_map<uint32_t, size_t> pos;
  for (Eigen::Index b : support(psi0)) {
    for (uint32_t hmask : group) {
      const uint32_t c = static_cast<uint32_t>(b) ^ hmask;
      if (pos.emplace(c, idx.size()).second) idx.push_back(c);
    }
  }
  const size_t s = idx.size();
  std::vector<std::array<size_t, 4>> partner(s);
  for (size_t k = 0; k < s; ++k) {
    for (size_t g = 0; g < 4; ++g) partner[k][g] = pos.at(static_cast<uint32_t>(idx[k]) ^ group[g]);
  }
  // <i_L| R_s restricted to the support.
  std::array<std::array<std::vector<Complex>, 2>, 4> bra;
  for (uint16_t syn = 0; syn < 4; ++syn) {
    const int block = CodeSpace::phase_syndrome_block(syn);
    const PauliString rec =
        block == 0 ? PauliString(kShorQubits) : code.phase_block_representative(block);
    for (int i = 0; i < 2; ++i) {
      const StateVector& basis = i == 0 ? code.logical_zero() : code.logical_one();
      bra[syn][i].resize(s);
      for (size_t k = 0; k < s; ++k) {
        bra[syn][i][k] =
            std::conj(basis[idx[k]]) * static_cast<double>(rec.z_sign(static_cast<uint32_t>(idx[k])));
      }
    }
  }

  PhaseBranchQuadrature out;
  for (auto& b : out.logical_block) b.setZero();
  std::vector<Complex> psi_s(s, Complex(0.0));
  std::vector<Complex> chi(s), proj(s);
  for (size_t k = 0; k < s; ++k) psi_s[k] = psi0[idx[k]];
  std::vector<Complex> zr_sign(s);
  for (size_t k = 0; k < s; ++k) zr_sign[k] = zr.z_sign(static_cast<uint32_t>(idx[k]));

  const double weight = 0.5 / quadrature_points;
  for (int j = 0; j < quadrature_points; ++j) {
    const double tp = (j + 0.5) * nu / quadrature_points;
    const double theta = 2.0 * params.J * tp;
    for (size_t k = 0; k < s; ++k) {
      const double angle = -h.energies()[idx[k]] * (tau - 2.0 * tp) +
                           theta * zx.z_sign(static_cast<uint32_t>(idx[k]));
      chi[k] = phase_factor(angle) * psi_s[k];
    }
    for (int branch = 0; branch < 2; ++branch) {
      // branch 0: rho_e, branch 1: Z_r rho_e Z_r
      std::vector<Complex> v(chi);
      if (branch == 1) {
        for (size_t k = 0; k < s; ++k) v[k] *= zr_sign[k];
      }
      for (uint16_t syn = 0; syn < 4; ++syn) {
        const std::array<double, 4> sign{1.0, (syn & 1) ? -1.0 : 1.0, (syn & 2) ? -1.0 : 1.0,
                                         (syn == 1 || syn == 2) ? -1.0 : 1.0};
        double norm2 = 0.0;
        Eigen::Vector2cd c = Eigen::Vector2cd::Zero();
        for (size_t k = 0; k < s; ++k) {
          Complex acc = 0.0;
          for (int g = 0; g < 4; ++g) acc += sign[g] * v[partner[k][g]];
          proj[k] = 0.25 * acc;
          norm2 += std::norm(proj[k]);
          c[0] += bra[syn][0][k] * proj[k];
          c[1] += bra[syn][1][k] * proj[k];
        }
        out.probability[syn] += weight * norm2;
        out.logical_block[syn] += weight * (c * c.adjoint());
      }
    }
  }
  return out;
}

SincCoefficients quadrature_sinc_coefficients(const SystemParams& params, int n,
                                              int quadrature_points) {
  const auto q = phase_branch_quadrature(params, shor_code().logical_zero(), 1, n, quadrature_points);
  return {q.logical_block[0](0, 0).real(), q.logical_block[0](1, 1).real()};
}

DensityMatrix predicted_rho_c(const DensityMatrix& rho_h_tau, double eps_tau, int n) {
  if (n < 1) throw std::invalid_argument("predicted_rho_c: n must be >= 1");
  CMatrix flipped(rho_h_tau.dim(), rho_h_tau.dim());
  kernels::parallel::conjugate_pauli(rho_h_tau.matrix(), shor_code().logical_x(), flipped);
  const double c = eps_tau * (1.0 - sinc(2.0 * pi / n));
  return DensityMatrix::unchecked(rho_h_tau.matrix() - c * (rho_h_tau.matrix() - flipped));
}

double predicted_distance(double eps_tau, int n, double l_yz) {
  if (n < 8) throw std::invalid_argument("predicted_distance: needs n >= 8");
  return 2.0 * pi * pi * eps_tau * l_yz / (3.0 * n * n);
}

double l_yz(const DensityMatrix& rho) {
  const auto b = shor_code().logical_bloch(rho);
  return std::hypot(b[1], b[2]);
}

double required_n(double epsilon, double omega, double tau) {
  if (!(epsilon > 0.0 && omega > 0.0 && tau > 0.0)) {
    throw std::invalid_argument("required_n: inputs must be positive");
  }
  return std::min(1.0, epsilon / omega) / std::sqrt(epsilon * tau);
}

FirstOrderReport first_order_report(const SystemParams& params, double epsilon, int n,
                                    const StateVector& psi0) {
  params.validate();
  const double tau = params.tau();
  const DensityMatrix rho_h = density_from_pure(evolve(build_hamiltonian(params), psi0, tau));
  FirstOrderReport rep;
  rep.bit_table = bit_branch_table(epsilon * tau);
  rep.phase_table = phase_branch_table(n);
  const auto a = sinc_coefficients(n);
  rep.a_plus = a.a_plus;
  rep.a_minus = a.a_minus;
  rep.rho_c_predicted = predicted_rho_c(rho_h, epsilon * tau, n);
  rep.l_yz = l_yz(rho_h);
  rep.distance_predicted = n >= 8 ? predicted_distance(epsilon * tau, n, rep.l_yz)
                                  : trace_distance(rep.rho_c_predicted, rho_h);
  rep.dropped_order = std::max(std::pow(epsilon * tau, 2), std::pow(params.omega * tau, 2));
  return rep;
}

double hamiltonian_p0l_closed_form(const SystemParams& params, double t) {
  const double c = std::cos(params.J * t), s = std::sin(params.J * t);
  const double w = std::cos(params.omega * t);
  return (std::pow(c, 6) + std::pow(s, 6)) * w * w;
}

std::vector<DistanceSweepRow> distance_sweep(const SystemParams& params, const NoiseParams& np,
                                             const StateVector& psi0, const std::vector<int>& ns) {
  params.validate();
  np.validate();
  const DensityMatrix rho0 = density_from_pure(psi0);
  const double tau = params.tau();
  const DensityMatrix rho_h = density_from_pure(evolve(build_hamiltonian(params), psi0, tau));
  const double lyz = l_yz(rho_h);
  std::vector<DistanceSweepRow> rows(ns.size());
  std::vector<std::exception_ptr> errors(ns.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (size_t i = 0; i < ns.size(); ++i) {
    try {
      const auto sched = SequenceSchedule::regular(params, ns[i], 1);
      SequenceOptions opt;
      opt.full_metrics = false;
      const auto res = run_sequence(rho0, params, np, sched, opt);
      const double d = trace_distance(res.final_state, rho_h);
      const double pred = ns[i] >= 8 ? predicted_distance(np.epsilon * tau, ns[i], lyz) : std::nan("");
      rows[i] = {ns[i], d, pred, lyz};
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

LineFit fit_inverse_square(const std::vector<DistanceSweepRow>& rows) {
  if (rows.size() < 2) throw std::invalid_argument("fit_inverse_square: need two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& r : rows) {
    const double x = 1.0 / (static_cast<double>(r.n) * r.n);
    sx += x;
    sy += r.distance;
    sxx += x * x;
    sxy += x * r.distance;
  }
  const double k = static_cast<double>(rows.size());
  const double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  return {slope, (sy - slope * sx) / k};
}

void echo_params(CsvTable& t, const SystemParams& p, const NoiseParams& np) {
  t.add_param("omega", p.omega);
  t.add_param("J", p.J);
  t.add_param("k1", p.k[0]);
  t.add_param("k4", p.k[1]);
  t.add_param("k7", p.k[2]);
  for (size_t i = 0; i < kOuterQubits.size(); ++i) t.add_param("g" + std::to_string(kOuterQubits[i]), p.g[i]);
  for (int i = 0; i < 9; ++i) t.add_param("zeta" + std::to_string(i + 1), p.zeta[i]);
  t.add_param("epsilon", np.epsilon);
  t.add_param("N", static_cast<double>(np.N));
  t.add_param("tau", p.tau());
}

CsvTable sweep_table(const SystemParams& params, const NoiseParams& np,
                     const std::vector<DistanceSweepRow>& rows) {
  CsvTable t;
  t.schema = "sweep";
  echo_params(t, params, np);
  const double tau = params.tau();
  const double eps_tau = np.epsilon * tau;
  const double dropped = std::max(eps_tau * eps_tau, std::pow(params.omega * tau, 2));
  if (rows.size() >= 2) {
    const auto fit = fit_inverse_square(rows);
    t.add_param("fit_slope", fit.slope);
    t.add_param("fit_intercept", fit.intercept);
    t.add_param("predicted_slope", 2.0 * pi * pi * eps_tau * rows.front().l_yz / 3.0);
  }
  t.columns = {"n", "inv_n2", "distance", "predicted", "l_yz", "eps_tau", "dropped_order"};
  for (const auto& r : rows) {
    t.rows.push_back({std::to_string(r.n), csv_number(1.0 / (static_cast<double>(r.n) * r.n)),
                      csv_number(r.distance), csv_number(r.predicted), csv_number(r.l_yz),
                      csv_number(eps_tau), csv_number(dropped)});
  }
  return t;
}

Figure parse_figure(const std::string& name) {
  if (name == "fig2") return Figure::Fig2;
  if (name == "fig3") return Figure::Fig3;
  if (name == "fig4") return Figure::Fig4;
  throw std::invalid_argument("unknown figure '" + name + "'");
}

CsvTable figure_series(Figure which, const SystemParams& params, const NoiseParams& np,
                       const FigureOptions& options) {
  params.validate();
  np.validate();
  const double tau = params.tau();
  double span = options.span_over_tau;
  if (span <= 0.0) span = params.omega > 0.0 ? 2.0 * pi / (params.omega * tau) : 4.0;
  const int periods = static_cast<int>(std::ceil(span - 1e-9));

  const CodeSpace& code = shor_code();
  const StateVector psi0 = code.logical_zero();
  const DensityMatrix rho0 = density_from_pure(psi0);
  const DiagonalHamiltonian h = build_hamiltonian(params);
  auto hamiltonian_p0l = [&](double t) { return std::norm(psi0.inner(evolve(h, psi0, t))); };
  auto rabi = [&](double t) { return std::pow(std::cos(params.omega * t), 2); };

  CsvTable table;
  echo_params(table, params, np);
  SequenceOptions opt;
  opt.sample_substeps = true;
  opt.full_metrics = false;

  auto leading = [&](const SequenceSample& s) {
    return std::vector<std::string>{csv_number(s.t / tau), csv_number(params.omega * s.t),
                                    to_string(s.stage)};
  };
  auto is_tm = [](const SequenceSample& s) {
    return s.stage == SampleStage::PostQec && s.period_index >= 0;
  };

  switch (which) {
    case Figure::Fig2: {
      table.schema = "fig2";
      table.add_param("mu_over_tau", options.mu_over_tau);
      SequenceSchedule sched = SequenceSchedule::regular(params, 1, periods);
      sched.mu = options.mu_over_tau * tau;
      const auto res = run_sequence(rho0, params, np, sched, opt);
      table.columns = {"t_over_tau", "omega_t", "stage", "rabi", "hamiltonian", "naive_qec"};
      for (const auto& s : res.samples) {
        auto row = leading(s);
        row.push_back(csv_number(rabi(s.t)));
        row.push_back(csv_number(hamiltonian_p0l(s.t)));
        row.push_back(csv_number(s.p0l));
        table.rows.push_back(std::move(row));
      }
      break;
    }
    case Figure::Fig3: {
      table.schema = "fig3";
      NoiseParams quiet = np;
      quiet.epsilon = 0.0;
      const auto res = run_sequence(rho0, params, quiet, SequenceSchedule::regular(params, 1, periods), opt);
      table.columns = {"t_over_tau", "omega_t", "stage", "rabi", "hamiltonian",
                       "hamiltonian_closed_form", "dot"};
      for (const auto& s : res.samples) {
        auto row = leading(s);
        row.push_back(csv_number(rabi(s.t)));
        row.push_back(csv_number(hamiltonian_p0l(s.t)));
        row.push_back(params.unit_k() ? csv_number(hamiltonian_p0l_closed_form(params, s.t)) : "");
        row.push_back(is_tm(s) ? csv_number(s.p0l) : "");
        table.rows.push_back(std::move(row));
      }
      break;
    }
    case Figure::Fig4: {
      table.schema = "fig4";
      table.add_param("n", static_cast<double>(options.n));
      const auto sched = SequenceSchedule::regular(params, options.n, periods);
      const auto corrected = run_sequence(rho0, params, np, sched, opt);
      SequenceOptions raw = opt;
      raw.correct = false;
      const auto noisy = run_sequence(rho0, params, np, sched, raw);
      table.columns = {"t_over_tau", "omega_t", "stage", "rabi", "hamiltonian",
                       "noisy", "corrected", "dot"};
      for (size_t i = 0; i < corrected.samples.size(); ++i) {
        const auto& s = corrected.samples[i];
        auto row = leading(s);
        row.push_back(csv_number(rabi(s.t)));
        row.push_back(csv_number(hamiltonian_p0l(s.t)));
        row.push_back(csv_number(noisy.samples[i].p0l));
        row.push_back(csv_number(s.p0l));
        row.push_back(is_tm(s) ? csv_number(s.p0l) : "");
        table.rows.push_back(std::move(row));
      }
      break;
    }
  }
  return table;
}

}  // namespace shorrabi
