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

#include "shorrabi/hamiltonian.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "shorrabi/kernels.hpp"
#include "shorrabi/shor_code.hpp"

namespace shorrabi {

namespace {

constexpr double kCodeTol = 1e-10;

// +1 / -1 eigenvalue of Z_q on basis state b.
inline double zval(uint32_t b, int q) { return ((b >> (kShorQubits - q)) & 1) ? -1.0 : 1.0; }

PauliString z_pair(int a, int b) {
  return PauliString::from_spec({{a, 'Z'}, {b, 'Z'}}, kShorQubits);
}

void require_code_space(const StateVector& psi0, const char* who) {
  if (psi0.num_qubits() != kShorQubits) {
    throw std::invalid_argument(std::string(who) + ": expected a 9-qubit state");
  }
  if (shor_code().code_weight(psi0) < 1.0 - kCodeTol) {
    throw std::invalid_argument(std::string(who) + ": initial state is outside the code space");
  }
}

void require_unit_k(const SystemParams& p, const char* who) {
  p.validate();
  if (!p.unit_k() || !p.zero_zeta()) {
    throw std::invalid_argument(std::string(who) + ": requires k = (1,1,1) and zeta = 0");
  }
}

CVector diag_product(const CVector& a, const CVector& b) { return a.cwiseProduct(b); }

}  // namespace

void SystemParams::validate() const {
  auto finite = [](double v) { return std::isfinite(v); };
  bool ok = finite(omega) && finite(J);
  for (double v : k) ok = ok && finite(v);
  for (double v : g) ok = ok && finite(v);
  for (double v : zeta) ok = ok && finite(v);
  if (!ok) throw std::invalid_argument("SystemParams: non-finite coupling");
  if (!(J > 0.0)) throw std::invalid_argument("SystemParams: J must be positive");
  if (omega < 0.0) throw std::invalid_argument("SystemParams: omega must be non-negative");
}

std::vector<std::string> SystemParams::warnings() const {
  std::vector<std::string> out;
  if (omega > 0.1 * J) {
    std::ostringstream os;
    os << "omega/J = " << omega / J << " is not small; the discrete oscillation assumes omega << J";
    out.push_back(os.str());
  }
  if (omega == 0.0) out.push_back("omega = 0: no logical oscillation");
  return out;
}

bool SystemParams::zero_zeta() const {
  for (double z : zeta) {
    if (z != 0.0) return false;
  }
  return true;
}

DiagonalHamiltonian::DiagonalHamiltonian(Eigen::VectorXd energies)
    : n_(0), energies_(std::move(energies)) {
  while ((Eigen::Index{1} << n_) < energies_.size()) ++n_;
  if ((Eigen::Index{1} << n_) != energies_.size()) {
    throw std::invalid_argument("DiagonalHamiltonian: size must be a power of two");
  }
}

CVector DiagonalHamiltonian::propagator(double t) const {
  CVector u(energies_.size());
  for (Eigen::Index b = 0; b < energies_.size(); ++b) {
    u[b] = std::polar(1.0, -energies_[b] * t);
  }
  return u;
}

StateVector DiagonalHamiltonian::evolve(const StateVector& psi, double t) const {
  if (psi.dim() != energies_.size()) throw std::invalid_argument("evolve: dimension mismatch");
  return StateVector(propagator(t).cwiseProduct(psi.amplitudes()));
}

DensityMatrix DiagonalHamiltonian::evolve(const DensityMatrix& rho, double t) const {
  if (rho.dim() != energies_.size()) throw std::invalid_argument("evolve: dimension mismatch");
  CMatrix m = rho.matrix();
  kernels::parallel::conjugate_diagonal(m, propagator(t));
  return DensityMatrix::unchecked(std::move(m));
}

DiagonalHamiltonian build_hamiltonian(const SystemParams& p) {
  const uint32_t dim = 1u << kShorQubits;
  Eigen::VectorXd e(dim);
  for (uint32_t b = 0; b < dim; ++b) {
    const double z1 = zval(b, 1), z4 = zval(b, 4), z7 = zval(b, 7);
    double energy = -p.omega * z1 * z4 * z7 -
                    p.J * (p.k[0] * z1 * z4 + p.k[1] * z4 * z7 + p.k[2] * z7 * z1);
    for (size_t j = 0; j < kOuterQubits.size(); ++j) {
      const int s = kOuterQubits[j];
      energy += p.g[j] * zval(b, s - 1) * zval(b, s);
    }
    for (int q = 1; q <= kShorQubits; ++q) energy -= 0.5 * p.zeta[q - 1] * zval(b, q);
    e[b] = energy;
  }
  return DiagonalHamiltonian(std::move(e));
}

StateVector evolve(const DiagonalHamiltonian& h, const StateVector& psi, double t) {
  return h.evolve(psi, t);
}

CVector z_string_exponential(const PauliString& z_string, double theta) {
  if (z_string.x_mask() != 0 || !z_string.is_hermitian()) {
    throw std::invalid_argument("z_string_exponential: expected a Hermitian Z-type string");
  }
  const double sign = z_string.phase_power() == 2 ? -1.0 : 1.0;
  CVector u(Eigen::Index{1} << z_string.num_qubits());
  for (Eigen::Index b = 0; b < u.size(); ++b) {
    u[b] = std::polar(1.0, theta * sign * z_string.z_sign(static_cast<uint32_t>(b)));
  }
  return u;
}

StateVector closed_form_state(const SystemParams& p, const StateVector& psi0, double t) {
  require_unit_k(p, "closed_form_state");
  require_code_space(psi0, "closed_form_state");
  const CodeSpace& code = shor_code();
  const double c = std::cos(p.J * t);
  const double s = std::sin(p.J * t);

  // e^{i omega t X_L} psi0
  const CVector rabi = std::cos(p.omega * t) * psi0.amplitudes() +
                       Complex(0.0, std::sin(p.omega * t)) *
                           apply_to_state(code.logical_x(), psi0).amplitudes();
  const StateVector rabi_state(rabi);
  const StateVector xl_rabi = apply_to_state(code.logical_x(), rabi_state);

  CVector out = Complex(c * c * c, -s * s * s) * rabi;
  const Complex second = Complex(0.0, 0.5) * std::polar(1.0, p.J * t) * std::sin(2.0 * p.J * t);
  for (int r : kTriangleQubits) {
    const PauliString zr = PauliString::from_spec({{r, 'Z'}}, kShorQubits);
    out += second * apply_to_state(zr, xl_rabi).amplitudes();
  }
  double gsum = 0.0;
  for (double g : p.g) gsum += g;
  out *= std::polar(1.0, -gsum * t);
  return StateVector(std::move(out));
}

StateVector post_bitflip_state(const SystemParams& p, const StateVector& psi0, double t_prime,
                               int m, int r) {
  require_unit_k(p, "post_bitflip_state");
  require_code_space(psi0, "post_bitflip_state");
  const double t_m = m * p.tau();
  if (m < 1 || !(t_prime > 0.0 && t_prime < t_m)) {
    throw std::invalid_argument("post_bitflip_state: need m >= 1 and 0 < t' < m tau");
  }
  int a = 0, b = 0;
  switch (r) {
    case 1: a = 4; b = 7; break;
    case 4: a = 7; b = 1; break;
    case 7: a = 1; b = 4; break;
    default:
      throw std::invalid_argument("post_bitflip_state: r must be 1, 4 or 7");
  }
  const CodeSpace& code = shor_code();
  const double shift = 2.0 * t_prime - t_m;

  // e^{i omega (2t' - t_m) X_L} psi0
  CVector v = std::cos(p.omega * shift) * psi0.amplitudes() +
              Complex(0.0, std::sin(p.omega * shift)) *
                  apply_to_state(code.logical_x(), psi0).amplitudes();
  // (i Z_a Z_b)^m
  const PauliString zab = z_pair(a, b);
  for (Eigen::Index idx = 0; idx < v.size(); ++idx) {
    const int sign = zab.z_sign(static_cast<uint32_t>(idx));
    Complex f = 1.0;
    for (int k = 0; k < m % 4; ++k) f *= Complex(0.0, sign);
    v[idx] *= f;
  }
  // e^{iJ(2t' - t_m)(Z_a Z_r + Z_r Z_b)}
  v = diag_product(z_string_exponential(z_pair(a, r), p.J * shift), v);
  v = diag_product(z_string_exponential(z_pair(r, b), p.J * shift), v);
  StateVector flipped =
      apply_to_state(PauliString::from_spec({{r, 'X'}}, kShorQubits), StateVector::normalized(v));

  double phase = 0.0;
  for (size_t j = 0; j < kOuterQubits.size(); ++j) {
    phase += (kOuterQubits[j] == r + 1 ? shift : t_m) * p.g[j];
  }
  return StateVector(std::polar(1.0, -phase) * flipped.amplitudes());
}

StateVector rotating_frame(const StateVector& psi, const std::array<double, 9>& zeta, double t) {
  if (psi.num_qubits() != kShorQubits) throw std::invalid_argument("rotating_frame: expected 9 qubits");
  CVector v = psi.amplitudes();
  for (Eigen::Index b = 0; b < v.size(); ++b) {
    double angle = 0.0;
    for (int q = 1; q <= kShorQubits; ++q) angle += zeta[q - 1] * zval(static_cast<uint32_t>(b), q);
    v[b] *= std::polar(1.0, -0.5 * angle * t);
  }
  return StateVector(std::move(v));
}

DensityMatrix rotating_frame(const DensityMatrix& rho, const std::array<double, 9>& zeta,
                             double t) {
  if (rho.num_qubits() != kShorQubits) throw std::invalid_argument("rotating_frame: expected 9 qubits");
  CVector u(rho.dim());
  for (Eigen::Index b = 0; b < u.size(); ++b) {
    double angle = 0.0;
    for (int q = 1; q <= kShorQubits; ++q) angle += zeta[q - 1] * zval(static_cast<uint32_t>(b), q);
    u[b] = std::polar(1.0, -0.5 * angle * t);
  }
  CMatrix m = rho.matrix();
  kernels::parallel::conjugate_diagonal(m, u);
  return DensityMatrix::unchecked(std::move(m));
}

}  // namespace shorrabi
