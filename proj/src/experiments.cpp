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


#include "shorrabi/experiments.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include "shorrabi/analysis.hpp"
#include "shorrabi/csv.hpp"
#include "shorrabi/noise.hpp"
#include "shorrabi/qec.hpp"
#include "shorrabi/schedule.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

namespace {

constexpr double kTraceTol = 1e-9;

std::string render(const CsvTable& t) {
  std::ostringstream os;
  t.write(os);
  return os.str();
}

CsvTable base_table(const std::string& schema, const ExperimentConfig& cfg) {
  CsvTable t;
  t.schema = schema;
  echo_params(t, cfg.params, cfg.noise);
  t.add_param("theta", cfg.theta);
  t.add_param("phi", cfg.phi);
  return t;
}

void check_sample(const SequenceSample& s, std::vector<std::string>& violations) {
  auto bad = [](double x) { return !(x >= -kTraceTol && x <= 1.0 + kTraceTol); };
  if (bad(s.p0l) || bad(s.code_weight)) {
    std::ostringstream msg;
    msg << "population outside [0, 1] at t = " << s.t << " (p0l " << s.p0l << ", code weight "
        << s.code_weight << ")";
    violations.push_back(msg.str());
  }
}

void check_state(const DensityMatrix& rho, std::vector<std::string>& violations) {
  if (std::abs(rho.trace() - 1.0) > kTraceTol) {
    violations.push_back("trace not preserved: " + csv_number(rho.trace().real()));
  }
  if (rho.hermiticity_error() > kTraceTol) {
    violations.push_back("state not Hermitian: " + csv_number(rho.hermiticity_error()));
  }
}

ExperimentOutput run_evolve(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  const StateVector psi0 = cfg.initial_state();
  const DensityMatrix rho0 = density_from_pure(psi0);
  SequenceOptions opt;
  opt.correct = false;
  const SequenceResult res = run_sequence(rho0, cfg.params, cfg.noise, cfg.schedule, opt);

  CsvTable t = base_table("evolve", cfg);
  t.add_param("n", static_cast<double>(cfg.schedule.n));
  t.add_param("periods", static_cast<double>(cfg.schedule.total_periods));
  t.columns = {"t_over_tau", "omega_t", "p0l", "code_space_weight", "trace_distance_to_noiseless",
               "rabi_fidelity"};
  for (const SequenceSample& s : res.samples) {
    if (s.stage != SampleStage::PostQec) continue;
    check_sample(s, out.violations);
    t.rows.push_back({csv_number(s.t / cfg.schedule.tau), csv_number(cfg.params.omega * s.t),
                      csv_number(s.p0l), csv_number(s.code_weight),
                      csv_number(s.distance_to_noiseless), csv_number(s.rabi_fidelity)});
  }
  check_state(res.final_state, out.violations);
  out.files.push_back({"evolve.csv", render(t)});

  if (cfg.trajectories > 0) {
    const double t_end = cfg.schedule.total_periods * cfg.schedule.tau;
    const DiagonalHamiltonian h = build_hamiltonian(cfg.params);
    const EnsembleSummary ens =
        run_trajectory_ensemble(psi0, t_end, h, cfg.noise, cfg.seed, cfg.trajectories);
    const DensityMatrix exact = evolve_noisy(rho0, t_end, h, cfg.noise);
    std::ostringstream rows;
    write_ensemble_csv(rows, ens);
    out.files.push_back({"trajectories.csv", rows.str()});

    CsvTable s = base_table("ensemble", cfg);
    s.add_param("seed", std::to_string(cfg.seed));
    s.columns = {"quantity", "value"};
    const double d = trace_distance(ens.average, exact);
    const double tol = 3.0 / std::sqrt(static_cast<double>(cfg.trajectories));
    s.rows.push_back({"trajectories", std::to_string(cfg.trajectories)});
    s.rows.push_back({"t_over_tau", csv_number(t_end / cfg.schedule.tau)});
    s.rows.push_back({"mean_events", csv_number(ens.mean_events)});
    s.rows.push_back({"stderr_events", csv_number(ens.stderr_events)});
    s.rows.push_back({"expected_events", csv_number(9.0 * cfg.noise.epsilon * t_end)});
    s.rows.push_back({"trace_distance_to_density_matrix", csv_number(d)});
    s.rows.push_back({"statistical_scale", csv_number(tol)});
    out.files.push_back({"ensemble.csv", render(s)});
    out.notes.push_back("ensemble vs density matrix: trace distance " + csv_number(d) +
                        " (3/sqrt(K) = " + csv_number(tol) + ")");
  }
  return out;
}

ExperimentOutput run_sequence_cmd(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  const DensityMatrix rho0 = density_from_pure(cfg.initial_state());
  const SequenceResult res = run_sequence(rho0, cfg.params, cfg.noise, cfg.schedule);
  CsvTable t = base_table("sequence", cfg);
  t.add_param("n", static_cast<double>(cfg.schedule.n));
  t.add_param("periods", static_cast<double>(cfg.schedule.total_periods));
  t.add_param("precorrection",
              cfg.schedule.precorrection ? cfg.schedule.precorrection->str() : std::string("none"));
  t.add_param("noise_order", cfg.schedule.noise_before_qec ? "before" : "after");
  if (cfg.schedule.mu) t.add_param("mu_over_tau", *cfg.schedule.mu / cfg.schedule.tau);
  t.columns = {"t_over_tau", "omega_t", "stage", "period", "p0l", "trace_distance_to_noiseless",
               "code_space_weight", "rabi_fidelity", "multi_error_probability"};
  for (const SequenceSample& s : res.samples) {
    check_sample(s, out.violations);
    t.rows.push_back({csv_number(s.t / cfg.schedule.tau), csv_number(cfg.params.omega * s.t),
                      to_string(s.stage), std::to_string(s.period_index), csv_number(s.p0l),
                      csv_number(s.distance_to_noiseless), csv_number(s.code_weight),
                      csv_number(s.rabi_fidelity), csv_number(s.multi_error_probability)});
  }
  check_state(res.final_state, out.violations);
  out.files.push_back({"sequence.csv", render(t)});
  return out;
}

ExperimentOutput run_figure(Figure which, const ExperimentConfig& cfg) {
  ExperimentOutput out;
  const CsvTable t = figure_series(which, cfg.params, cfg.noise, cfg.figure);
  const char* names[] = {"fig2.csv", "fig3.csv", "fig4.csv"};
  out.files.push_back({names[static_cast<int>(which)], render(t)});
  for (const std::string& w : cfg.params.warnings()) out.notes.push_back(w);
  return out;
}

ExperimentOutput run_kl_check(const ExperimentConfig&) {
  ExperimentOutput out;
  const CodeSpace& code = shor_code();
  const std::vector<PauliString> errors = paulis_up_to_weight(kShorQubits, 1, 0);
  const KLReport rep = kl_check(code, errors);

  CsvTable t;
  t.schema = "kl";
  t.add_param("errors", static_cast<double>(errors.size()));
  t.add_param("violations", static_cast<double>(rep.violations.size()));
  t.columns = {"i", "j", "error_i", "error_j", "chi_re", "chi_im"};
  for (size_t i = 0; i < errors.size(); ++i) {
    for (size_t j = 0; j < errors.size(); ++j) {
      const Complex c = rep.chi(i, j);
      t.rows.push_back({std::to_string(i), std::to_string(j), errors[i].str(), errors[j].str(),
                        csv_number(c.real()), csv_number(c.imag())});
    }
  }
  out.files.push_back({"kl.csv", render(t)});
  for (const auto& v : rep.violations) {
    out.violations.push_back("Knill-Laflamme violated for " + errors[v.i].str() + ", " +
                             errors[v.j].str() + " (residual " + csv_number(v.residual) + ")");
  }
  const double herm = (rep.chi - rep.chi.adjoint()).cwiseAbs().maxCoeff();
  if (herm > 1e-12) out.violations.push_back("chi not Hermitian: " + csv_number(herm));

  CsvTable s;
  s.schema = "logical_search";
  s.columns = {"max_weight", "candidates_checked", "found"};
  for (int w = 1; w <= 3; ++w) {
    const LogicalSearchResult r = min_weight_logical_x(code, w);
    s.rows.push_back({std::to_string(w), std::to_string(r.candidates_checked),
                      r.found ? r.found->str() : std::string("none")});
    if (w <= 2 && r.found) {
      out.violations.push_back("logical X of weight <= 2 found: " + r.found->str());
    }
  }
  out.files.push_back({"logical_search.csv", render(s)});
  return out;
}

ExperimentOutput run_couplings(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  CouplingTables tables;
  if (cfg.coupling_tables.empty()) {
    tables = gaussian_model_tables();
  } else {
    std::ifstream in(cfg.coupling_tables);
    if (!in) throw ConfigError("cannot read " + cfg.coupling_tables.string());
    tables = read_tables_csv(in);
  }
  const TriangleCouplings c = couplings_from_tables(tables);
  const auto lhs = table_energies(tables);
  const auto rhs = effective_energies(c);
  double shift = 0.0;
  for (int i = 0; i < 8; ++i) shift += (lhs[i] - rhs[i]) / 8.0;
  double mismatch = 0.0, scale = 0.0;
  for (int i = 0; i < 8; ++i) {
    mismatch = std::max(mismatch, std::abs(lhs[i] - rhs[i] - shift));
    scale = std::max(scale, std::abs(lhs[i]));
  }
  if (mismatch > 1e-12 * std::max(1.0, scale)) {
    out.violations.push_back("effective diagonal differs from the tables by " + csv_number(mismatch));
  }

  std::ostringstream tab;
  write_tables_csv(tab, tables);
  out.files.push_back({"tables.csv", tab.str()});

  CsvTable t;
  t.schema = "couplings";
  t.columns = {"quantity", "value"};
  const char* zn[] = {"zeta1", "zeta4", "zeta7"};
  const char* jn[] = {"J14", "J47", "J71"};
  for (int r = 0; r < 3; ++r) t.rows.push_back({zn[r], csv_number(c.zeta[r])});
  for (int r = 0; r < 3; ++r) t.rows.push_back({jn[r], csv_number(c.J[r])});
  t.rows.push_back({"omega", csv_number(c.omega)});
  t.rows.push_back({"energy_shift", csv_number(shift)});
  t.rows.push_back({"diagonal_mismatch", csv_number(mismatch)});
  out.files.push_back({"couplings.csv", render(t)});

  if (c.J[0] > 0.0 && c.J[1] > 0.0 && c.J[2] > 0.0) {
    const SystemParams sp = to_system_params(c);
    const CouplingNormalization norm =
        normalize_couplings(sp.k, sp.J, std::abs(sp.omega), cfg.k_tolerance, cfg.max_denominator);
    CsvTable nt;
    nt.schema = "normalization";
    nt.add_param("exact", norm.exact ? "true" : "false");
    nt.add_param("J_prime", norm.J_prime);
    nt.add_param("kappa", norm.kappa);
    nt.add_param("k_prime", std::to_string(norm.k_prime[0]) + ":" + std::to_string(norm.k_prime[1]) +
                                ":" + std::to_string(norm.k_prime[2]));
    nt.add_param("horizon", norm.horizon);
    nt.columns = {"component", "k", "numerator", "denominator", "error", "horizon"};
    for (int r = 0; r < 3; ++r) {
      for (const RationalApproximant& a : norm.convergents[r]) {
        nt.rows.push_back({std::to_string(kTriangleQubits[r]), csv_number(sp.k[r]),
                           std::to_string(a.numerator), std::to_string(a.denominator),
                           csv_number(a.error), csv_number(a.horizon)});
      }
    }
    out.files.push_back({"normalization.csv", render(nt)});
    for (const std::string& w : norm.warnings) out.notes.push_back(w);
  } else {
    out.notes.push_back("pair couplings not all positive; k normalization skipped");
  }
  return out;
}

ExperimentOutput run_diagnostics(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  const DiagnosticsSettings& d = cfg.diagnostics;
  std::array<double, 9> zeta{};
  for (int i = 0; i < 9; ++i) zeta[i] = d.zeta_unit * std::ldexp(1.0, 8 - i);
  const DiagonalHamiltonian h0 = single_qubit_hamiltonian(zeta);
  SystemParams hp = cfg.params;
  hp.zeta = {};
  const DiagonalHamiltonian h = build_hamiltonian(hp);
  const CMatrix base = random_off_diagonal(1 << kShorQubits, d.h_prime_seed);
  const double base_xi = xi_measures(h0, base).xi_bar;
  const CodeSpace& code = shor_code();
  const std::vector<StateVector> probes{code.logical_zero(), code.logical_one(), cfg.initial_state()};

  CsvTable t;
  t.schema = "diagnostics";
  echo_params(t, hp, NoiseParams{});
  t.add_param("zeta_unit", d.zeta_unit);
  t.add_param("h_prime_seed", std::to_string(d.h_prime_seed));
  t.columns = {"xi_bar", "J_t", "q_norm", "deviation"};
  for (double target : d.xi_bar) {
    const EffectiveEvolution ev(h0, h, base * (target / base_xi));
    for (double jt : d.times) {
      const double time = jt / cfg.params.J;
      t.rows.push_back({csv_number(target), csv_number(jt), csv_number(ev.q_norm(time)),
                        csv_number(ev.deviation(time, probes))});
    }
  }
  out.files.push_back({"diagnostics.csv", render(t)});
  return out;
}

ExperimentOutput run_sweep(const ExperimentConfig& cfg) {
  ExperimentOutput out;
  const StateVector psi0 = cfg.initial_state();
  const auto rows = distance_sweep(cfg.params, cfg.noise, psi0, cfg.sweep_ns);
  out.files.push_back({"sweep.csv", render(sweep_table(cfg.params, cfg.noise, rows))});

  CsvTable b = base_table("phase_branches", cfg);
  b.add_param("quadrature_points", static_cast<double>(cfg.quadrature_points));
  b.columns = {"n", "r", "syndrome", "probability_quadrature", "probability_table"};
  for (int n : cfg.sweep_ns) {
    const auto table = phase_branch_table(n);
    for (int r : kTriangleQubits) {
      const auto q = phase_branch_quadrature(cfg.params, psi0, r, n, cfg.quadrature_points);
      const int block_of_r = (r - 1) / 3 + 1;
      for (int s = 0; s < 4; ++s) {
        const int block = CodeSpace::phase_syndrome_block(static_cast<uint16_t>(s));
        // "none" and Z_r share the larger weight; the other two blocks the smaller.
        const double expected = (block == 0 || block == block_of_r) ? table.front().probability
                                                                     : table.back().probability;
        b.rows.push_back({std::to_string(n), std::to_string(r), std::to_string(s),
                          csv_number(q.probability[s]), csv_number(expected)});
      }
    }
  }
  out.files.push_back({"phase_branches.csv", render(b)});
  return out;
}

}  // namespace

const std::vector<std::string>& subcommand_names() {
  static const std::vector<std::string> names{"evolve", "sequence", "fig2", "fig3", "fig4",
                                              "kl-check", "couplings", "diagnostics", "sweep"};
  return names;
}

Subcommand parse_subcommand(const std::string& name) {
  const auto& names = subcommand_names();
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<Subcommand>(i);
  }
  throw std::invalid_argument("unknown subcommand '" + name + "'");
}

std::string to_string(Subcommand s) { return subcommand_names()[static_cast<size_t>(s)]; }

void apply_overrides(ExperimentConfig& cfg, const RunOverrides& o) {
  if (o.seed) cfg.seed = *o.seed;
  if (o.trajectories) {
    if (*o.trajectories < 0) throw ConfigError("--trajectories must be >= 0");
    cfg.trajectories = *o.trajectories;
  }
  if (o.quadrature_points) {
    if (*o.quadrature_points < 1) throw ConfigError("--quadrature-points must be >= 1");
    cfg.quadrature_points = *o.quadrature_points;
  }
}

ExperimentOutput build_outputs(Subcommand s, const ExperimentConfig& cfg) {
  switch (s) {
    case Subcommand::Evolve:
      return run_evolve(cfg);
    case Subcommand::Sequence:
      return run_sequence_cmd(cfg);
    case Subcommand::Fig2:
      return run_figure(Figure::Fig2, cfg);
    case Subcommand::Fig3:
      return run_figure(Figure::Fig3, cfg);
    case Subcommand::Fig4:
      return run_figure(Figure::Fig4, cfg);
    case Subcommand::KlCheck:
      return run_kl_check(cfg);
    case Subcommand::Couplings:
      return run_couplings(cfg);
    case Subcommand::Diagnostics:
      return run_diagnostics(cfg);
    case Subcommand::Sweep:
      return run_sweep(cfg);
  }
  throw std::logic_error("build_outputs: bad subcommand");
}

std::vector<std::filesystem::path> run_experiment(Subcommand s, const ExperimentConfig& cfg,
                                                  const std::filesystem::path& out_dir,
                                                  std::ostream& log) {
  const ExperimentOutput out = build_outputs(s, cfg);
  std::filesystem::create_directories(out_dir);
  std::vector<std::filesystem::path> written;
  for (const NamedOutput& f : out.files) {
    const auto path = out_dir / f.filename;
    std::ofstream os(path, std::ios::binary);
    os << f.content;
    if (!os) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path);
    log << "wrote " << path.string() << "\n";
  }
  for (const std::string& n : out.notes) log << "note: " << n << "\n";
  if (!out.violations.empty()) {
    std::string msg = to_string(s) + ": " + std::to_string(out.violations.size()) +
                      " invariant violation(s); first: " + out.violations.front();
    throw InvariantViolation(msg);
  }
  return written;
}

CouplingTables gaussian_model_tables() {
  SampledWavefunctions wf;
  const double centres[3] = {0.0, 3.1, 6.7};
  const double widths[3][2] = {{0.45, 0.7}, {0.5, 0.8}, {0.42, 0.66}};
  for (int r = 0; r < 3; ++r) {
    for (int a = 0; a < 2; ++a) {
      const double sigma = widths[r][a];
      wf.dots[r][a] = gaussian_density_1d(centres[r] + 0.6 * a, sigma, 7.0 * sigma, 64);
    }
  }
  const PairKernel coulomb = [](const Point& x, const Point& y) {
    const double d = x[0] - y[0];
    return 1.0 / std::sqrt(d * d + 0.25);
  };
  const TripleKernel contact = [](const Point& x, const Point& y, const Point& z) {
    const double a = x[0] - y[0], b = y[0] - z[0], c = z[0] - x[0];
    return 0.05 * std::exp(-(a * a + b * b + c * c) / 30.0);
  };
  CouplingTables t = tables_from_wavefunctions(wf, coulomb, contact);
  t.zeta0 = {10.0, 11.3, 12.9};
  return t;
}

DiagonalHamiltonian single_qubit_hamiltonian(const std::array<double, 9>& zeta) {
  Eigen::VectorXd e = Eigen::VectorXd::Zero(1 << kShorQubits);
  for (Eigen::Index b = 0; b < e.size(); ++b) {
    for (int q = 1; q <= kShorQubits; ++q) {
      const bool one = (b >> (kShorQubits - q)) & 1;
      e[b] -= 0.5 * zeta[q - 1] * (one ? -1.0 : 1.0);
    }
  }
  return DiagonalHamiltonian(std::move(e));
}

}  // namespace shorrabi
