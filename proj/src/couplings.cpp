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

#include "shorrabi/couplings.hpp"

#include <cmath>
#include <istream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>

#include "shorrabi/csv.hpp"

namespace shorrabi {

namespace {

inline double sgn(int bits) { return (bits & 1) ? -1.0 : 1.0; }

}  // namespace

TriangleCouplings couplings_from_tables(const CouplingTables& ct) {
  TriangleCouplings out;
  out.zeta = ct.zeta0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      out.zeta[0] -= 0.5 * sgn(a) * (ct.v_a_dot_b(a, b) + ct.v_ab_dot(a, b));
      out.zeta[1] -= 0.5 * (sgn(b) * ct.v_ab_dot(a, b) + sgn(a) * ct.v_dot_ab(a, b));
      out.zeta[2] -= 0.5 * sgn(b) * (ct.v_a_dot_b(a, b) + ct.v_dot_ab(a, b));
      out.J[0] -= 0.25 * sgn(a + b) * ct.v_ab_dot(a, b);
      out.J[1] -= 0.25 * sgn(a + b) * ct.v_dot_ab(a, b);
      out.J[2] -= 0.25 * sgn(a + b) * ct.v_a_dot_b(a, b);
      for (int c = 0; c < 2; ++c) {
        const double w = ct.W(a, b, c);
        out.zeta[0] -= 0.25 * sgn(a) * w;
        out.zeta[1] -= 0.25 * sgn(b) * w;
        out.zeta[2] -= 0.25 * sgn(c) * w;
        out.J[0] -= 0.125 * sgn(a + b) * w;
        out.J[1] -= 0.125 * sgn(b + c) * w;
        out.J[2] -= 0.125 * sgn(a + c) * w;
        out.omega -= 0.125 * sgn(a + b + c) * w;
      }
    }
  }
  return out;
}

std::array<double, 8> table_energies(const CouplingTables& ct) {
  std::array<double, 8> e{};
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int c = 0; c < 2; ++c) {
        e[4 * a + 2 * b + c] = a * ct.zeta0[0] + b * ct.zeta0[1] + c * ct.zeta0[2] +
                               ct.v_ab_dot(a, b) + ct.v_a_dot_b(a, c) + ct.v_dot_ab(b, c) +
                               ct.W(a, b, c);
      }
    }
  }
  return e;
}

std::array<double, 8> effective_energies(const TriangleCouplings& c) {
  std::array<double, 8> e{};
  for (int i = 0; i < 8; ++i) {
    const double z1 = sgn(i >> 2), z4 = sgn(i >> 1), z7 = sgn(i);
    e[i] = -0.5 * (c.zeta[0] * z1 + c.zeta[1] * z4 + c.zeta[2] * z7) -
           (c.J[0] * z1 * z4 + c.J[1] * z4 * z7 + c.J[2] * z7 * z1) - c.omega * z1 * z4 * z7;
  }
  return e;
}

SystemParams to_system_params(const TriangleCouplings& c) {
  if (!(c.J[0] > 0.0)) throw std::invalid_argument("to_system_params: J14 must be > 0");
  SystemParams p;
  p.J = c.J[0];
  p.k = {1.0, c.J[1] / c.J[0], c.J[2] / c.J[0]};
  p.omega = c.omega;
  p.zeta = {};
  p.zeta[0] = c.zeta[0];
  p.zeta[3] = c.zeta[1];
  p.zeta[6] = c.zeta[2];
  return p;
}

double SampledDensity::integral() const {
  double s = 0.0;
  for (double d : density) s += d;
  return s * cell;
}

namespace {

void check_density(const SampledDensity& d) {
  if (d.points.size() != d.density.size()) {
    throw std::invalid_argument("sampled density: points and values differ in length");
  }
  if (!(d.cell > 0.0)) throw std::invalid_argument("sampled density: cell volume must be > 0");
  const double total = d.integral();
  if (std::abs(total - 1.0) > 1e-6) {
    throw std::invalid_argument("sampled density integrates to " + std::to_string(total) +
                                ", not 1");
  }
}

double pair_integral(const SampledDensity& x, const SampledDensity& y, const PairKernel& v) {
  const size_t nx = x.points.size();
  std::vector<double> partial(nx, 0.0);
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < nx; ++i) {
    double s = 0.0;
    for (size_t j = 0; j < y.points.size(); ++j) s += y.density[j] * v(x.points[i], y.points[j]);
    partial[i] = x.density[i] * s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total * x.cell * y.cell;
}

double triple_integral(const SampledDensity& x, const SampledDensity& y, const SampledDensity& z,
                       const TripleKernel& w) {
  const size_t nx = x.points.size();
  std::vector<double> partial(nx, 0.0);
#pragma omp parallel for schedule(static)
  for (size_t i = 0; i < nx; ++i) {
    double s = 0.0;
    for (size_t j = 0; j < y.points.size(); ++j) {
      double sz = 0.0;
      for (size_t k = 0; k < z.points.size(); ++k) {
        sz += z.density[k] * w(x.points[i], y.points[j], z.points[k]);
      }
      s += y.density[j] * sz;
    }
    partial[i] = x.density[i] * s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total * x.cell * y.cell * z.cell;
}

}  // namespace

CouplingTables tables_from_wavefunctions(const SampledWavefunctions& wf, const PairKernel& v,
                                         const TripleKernel& w) {
  for (const auto& dot : wf.dots) {
    for (const auto& level : dot) check_density(level);
  }
  const auto& d1 = wf.dots[0];
  const auto& d4 = wf.dots[1];
  const auto& d7 = wf.dots[2];
  CouplingTables ct;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      ct.v_ab_dot(a, b) = pair_integral(d1[a], d4[b], v);
      ct.v_a_dot_b(a, b) = pair_integral(d1[a], d7[b], v);
      ct.v_dot_ab(a, b) = pair_integral(d4[a], d7[b], v);
      if (w) {
        for (int c = 0; c < 2; ++c) ct.W(a, b, c) = triple_integral(d1[a], d4[b], d7[c], w);
      }
    }
  }
  return ct;
}

SampledDensity gaussian_density_1d(double centre, double sigma, double half_width, int points) {
  if (!(sigma > 0.0) || !(half_width > 0.0) || points < 1) {
    throw std::invalid_argument("gaussian_density_1d: bad grid");
  }
  SampledDensity d;
  const double h = 2.0 * half_width / points;
  d.cell = h;
  const double norm = 1.0 / (sigma * std::sqrt(2.0 * std::numbers::pi));
  for (int i = 0; i < points; ++i) {
    const double x = centre - half_width + (i + 0.5) * h;
    d.points.push_back({x, 0.0});
    d.density.push_back(norm * std::exp(-0.5 * std::pow((x - centre) / sigma, 2)));
  }
  return d;
}

OffDiagonalDiagnostics xi_measures(const DiagonalHamiltonian& h0, const CMatrix& h_prime) {
  const Eigen::Index dim = h0.energies().size();
  if (h_prime.rows() != dim || h_prime.cols() != dim) {
    throw std::invalid_argument("off-diagonal diagnostics: H' size mismatch");
  }
  const double scale = std::max(1.0, h_prime.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < dim; ++i) {
    if (std::abs(h_prime(i, i)) > 1e-14 * scale) {
      throw std::invalid_argument("off-diagonal diagnostics: H' must have zero diagonal");
    }
  }
  const double e_scale = std::max(1.0, h0.energies().cwiseAbs().maxCoeff());
  OffDiagonalDiagnostics out;
  out.xi = CMatrix::Zero(dim, dim);
  double sum = 0.0;
  for (Eigen::Index m = 0; m < dim; ++m) {
    for (Eigen::Index n = 0; n < dim; ++n) {
      if (n == m || h_prime(n, m) == Complex(0.0)) continue;
      const double de = h0.energies()[n] - h0.energies()[m];
      if (std::abs(de) <= 1e-12 * e_scale) {
        throw std::invalid_argument("off-diagonal diagnostics: resonant pair (" + std::to_string(n) +
                                    ", " + std::to_string(m) + "), xi_bar is infinite");
      }
      out.xi(n, m) = h_prime(n, m) / de;
      sum += std::norm(out.xi(n, m));
    }
  }
  out.xi_bar = std::sqrt(sum);
  return out;
}

EffectiveEvolution::EffectiveEvolution(const DiagonalHamiltonian& h0, const DiagonalHamiltonian& h,
                                       const CMatrix& h_prime)
    : diag_(h0.energies() + h.energies()) {
  if (h0.energies().size() != h.energies().size() || h_prime.rows() != diag_.size()) {
    throw std::invalid_argument("EffectiveEvolution: size mismatch");
  }
  CMatrix heff = h_prime;
  heff.diagonal() += diag_.cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> es(heff);
  if (es.info() != Eigen::Success) throw std::runtime_error("EffectiveEvolution: eigensolver failed");
  eval_ = es.eigenvalues();
  evec_ = es.eigenvectors();
}

CMatrix EffectiveEvolution::propagator(double t) const {
  CVector phases(eval_.size());
  for (Eigen::Index i = 0; i < eval_.size(); ++i) {
    phases[i] = Complex(std::cos(eval_[i] * t), -std::sin(eval_[i] * t));
  }
  return evec_ * phases.asDiagonal() * evec_.adjoint();
}

double EffectiveEvolution::q_norm(double t) const {
  CMatrix m = propagator(t);
  for (Eigen::Index n = 0; n < diag_.size(); ++n) {
    m.row(n) *= Complex(std::cos(diag_[n] * t), std::sin(diag_[n] * t));  // U^dagger
  }
  // m is unitary, hence normal: (m + m^dag)/2 and (m - m^dag)/2i share its
  // eigenvectors with eigenvalues cos(theta) and sin(theta). The sine form
  // resolves small phases to full precision; the general solver covers
  // phases beyond pi/2.
  const CMatrix herm_cos = (m + m.adjoint()) / 2.0;
  const CMatrix herm_sin = (m - m.adjoint()) / Complex(0.0, 2.0);
  Eigen::SelfAdjointEigenSolver<CMatrix> cos_es(herm_cos, Eigen::EigenvaluesOnly);
  if (cos_es.info() == Eigen::Success && cos_es.eigenvalues().minCoeff() > 0.1) {
    Eigen::SelfAdjointEigenSolver<CMatrix> sin_es(herm_sin, Eigen::EigenvaluesOnly);
    if (sin_es.info() != Eigen::Success) throw std::runtime_error("q_norm: eigensolver failed");
    const double s = sin_es.eigenvalues().cwiseAbs().maxCoeff();
    return std::asin(std::min(1.0, s));
  }
  Eigen::ComplexEigenSolver<CMatrix> es(m, false);
  if (es.info() != Eigen::Success) throw std::runtime_error("q_norm: eigensolver failed");
  double worst = 0.0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    worst = std::max(worst, std::abs(std::arg(es.eigenvalues()[i])));
  }
  return worst;
}

double EffectiveEvolution::deviation(double t, const std::vector<StateVector>& states) const {
  const CMatrix ueff = propagator(t);
  double worst = 0.0;
  for (const auto& psi : states) {
    CVector u = psi.amplitudes();
    for (Eigen::Index n = 0; n < u.size(); ++n) u[n] *= Complex(std::cos(diag_[n] * t), -std::sin(diag_[n] * t));
    worst = std::max(worst, (ueff * psi.amplitudes() - u).norm());
  }
  return worst;
}

OffDiagonalDiagnostics off_diagonal_diagnostics(const DiagonalHamiltonian& h0,
                                                const DiagonalHamiltonian& h,
                                                const CMatrix& h_prime, double t) {
  OffDiagonalDiagnostics out = xi_measures(h0, h_prime);
  if (out.xi_bar == 0.0) return out;
  out.q_norm = EffectiveEvolution(h0, h, h_prime).q_norm(t);
  return out;
}

CMatrix random_off_diagonal(int dim, uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m = CMatrix::Zero(dim, dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < c; ++r) {
      const double re = normal(gen);
      const double im = normal(gen);
      m(r, c) = Complex(re, im);
      m(c, r) = Complex(re, -im);
    }
  }
  return m;
}

void write_tables_csv(std::ostream& os, const CouplingTables& ct) {
  os << "table,a,b,c,value\n";
  const std::array<int, 3> dots{1, 4, 7};
  for (int r = 0; r < 3; ++r) os << "zeta0," << dots[r] << ",,," << csv_number(ct.zeta0[r]) << '\n';
  const std::array<std::pair<const char*, const Eigen::Matrix2d*>, 3> pairs{
      {{"V_ab.", &ct.v_ab_dot}, {"V_a.b", &ct.v_a_dot_b}, {"V_.ab", &ct.v_dot_ab}}};
  for (const auto& [name, m] : pairs) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) os << name << ',' << a << ',' << b << ",," << csv_number((*m)(a, b)) << '\n';
    }
  }
  for (int i = 0; i < 8; ++i) {
    os << "W," << (i >> 2) << ',' << ((i >> 1) & 1) << ',' << (i & 1) << ',' << csv_number(ct.w[i]) << '\n';
  }
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

int level(const std::string& s, int line_no) {
  if (s == "0") return 0;
  if (s == "1") return 1;
  throw std::invalid_argument("tables csv line " + std::to_string(line_no) + ": level must be 0 or 1");
}

}  // namespace

CouplingTables read_tables_csv(std::istream& is) {
  CouplingTables ct;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.rfind("table,", 0) == 0) continue;
    const auto f = split(line);
    if (f.size() != 5) {
      throw std::invalid_argument("tables csv line " + std::to_string(line_no) + ": expected 5 fields");
    }
    double value = 0.0;
    try {
      value = std::stod(f[4]);
    } catch (const std::exception&) {
      throw std::invalid_argument("tables csv line " + std::to_string(line_no) + ": bad value");
    }
    if (f[0] == "zeta0") {
      const int dot = std::stoi(f[1]);
      const int idx = dot == 1 ? 0 : dot == 4 ? 1 : dot == 7 ? 2 : -1;
      if (idx < 0) throw std::invalid_argument("tables csv: zeta0 dot must be 1, 4 or 7");
      ct.zeta0[idx] = value;
    } else if (f[0] == "V_ab.") {
      ct.v_ab_dot(level(f[1], line_no), level(f[2], line_no)) = value;
    } else if (f[0] == "V_a.b") {
      ct.v_a_dot_b(level(f[1], line_no), level(f[2], line_no)) = value;
    } else if (f[0] == "V_.ab") {
      ct.v_dot_ab(level(f[1], line_no), level(f[2], line_no)) = value;
    } else if (f[0] == "W") {
      ct.W(level(f[1], line_no), level(f[2], line_no), level(f[3], line_no)) = value;
    } else {
      throw std::invalid_argument("tables csv line " + std::to_string(line_no) + ": unknown table '" +
                                  f[0] + "'");
    }
  }
  return ct;
}

void write_density_csv(std::ostream& os, const SampledDensity& d, int dimension) {
  if (dimension != 1 && dimension != 2) throw std::invalid_argument("density csv: dimension 1 or 2");
  os << (dimension == 1 ? "x,density\n" : "x,y,density\n");
  for (size_t i = 0; i < d.points.size(); ++i) {
    os << csv_number(d.points[i][0]) << ',';
    if (dimension == 2) os << csv_number(d.points[i][1]) << ',';
    os << csv_number(d.density[i]) << '\n';
  }
}

SampledDensity read_density_csv(std::istream& is, double cell) {
  SampledDensity d;
  d.cell = cell;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#' || line.rfind("x,", 0) == 0) continue;
    const auto f = split(line);
    try {
      if (f.size() == 2) {
        d.points.push_back({std::stod(f[0]), 0.0});
        d.density.push_back(std::stod(f[1]));
      } else if (f.size() == 3) {
        d.points.push_back({std::stod(f[0]), std::stod(f[1])});
        d.density.push_back(std::stod(f[2]));
      } else {
        throw std::invalid_argument("field count");
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("density csv line " + std::to_string(line_no) + ": malformed");
    }
  }
  return d;
}

}  // namespace shorrabi
