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

#include "shorrabi/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "shorrabi/state.hpp"

namespace shorrabi {

namespace {

constexpr std::complex<double> kIPowers[4] = {
    {1, 0}, {0, 1}, {-1, 0}, {0, -1}};

int mod4(int k) { return ((k % 4) + 4) % 4; }

// Exponent of i produced by multiplying single-qubit Paulis (x1,z1)(x2,z2)
// in the Hermitian-letter convention.
int product_exponent(int x1, int z1, int x2, int z2) {
  if (x1 == 0 && z1 == 0) return 0;
  if (x1 == 1 && z1 == 1) return z2 - x2;
  if (x1 == 1) return z2 * (2 * x2 - 1);
  return x2 * (1 - 2 * z2);
}

}  // namespace

PauliString::PauliString(int num_qubits) : PauliString(num_qubits, 0, 0, 0) {}

PauliString::PauliString(int n, uint32_t x, uint32_t z, int phase)
    : n_(n), x_(x), z_(z), phase_(mod4(phase)) {
  if (n < 1 || n > kMaxQubits) {
    throw std::invalid_argument("PauliString: qubit count must be in [1, 12]");
  }
  const uint32_t full = (uint32_t{1} << n) - 1;
  if ((x & ~full) != 0 || (z & ~full) != 0) {
    throw std::invalid_argument("PauliString: mask exceeds qubit count");
  }
}

PauliString PauliString::from_masks(int num_qubits, uint32_t x_mask,
                                    uint32_t z_mask, int phase_power) {
  return PauliString(num_qubits, x_mask, z_mask, phase_power);
}

uint32_t PauliString::qubit_bit(int qubit) const {
  if (qubit < 1 || qubit > n_) {
    throw std::invalid_argument("PauliString: qubit " + std::to_string(qubit) +
                                " out of range");
  }
  return uint32_t{1} << (n_ - qubit);
}

PauliString PauliString::from_spec(
    const std::vector<std::pair<int, char>>& spec, int num_qubits) {
  PauliString p(num_qubits);
  uint32_t seen = 0;
  for (const auto& [qubit, letter] : spec) {
    const uint32_t bit = p.qubit_bit(qubit);
    if (seen & bit) {
      throw std::invalid_argument("PauliString: duplicate qubit " +
                                  std::to_string(qubit));
    }
    seen |= bit;
    switch (std::toupper(static_cast<unsigned char>(letter))) {
      case 'I':
        break;
      case 'X':
        p.x_ |= bit;
        break;
      case 'Y':
        p.x_ |= bit;
        p.z_ |= bit;
        break;
      case 'Z':
        p.z_ |= bit;
        break;
      default:
        throw std::invalid_argument(std::string("PauliString: bad letter '") +
                                    letter + "'");
    }
  }
  return p;
}

PauliString PauliString::parse(std::string_view text, int num_qubits) {
  size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  int phase = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase = 2;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  std::vector<std::pair<int, char>> spec;
  bool saw_identity = false;
  for (;;) {
    skip_space();
    if (pos >= text.size()) break;
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    ++pos;
    if (letter == 'I' && (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))) {
      saw_identity = true;
      continue;
    }
    if (letter != 'X' && letter != 'Y' && letter != 'Z' && letter != 'I') {
      throw std::invalid_argument("PauliString: cannot parse '" + std::string(text) + "'");
    }
    size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos) {
      throw std::invalid_argument("PauliString: missing qubit index in '" +
                                  std::string(text) + "'");
    }
    spec.emplace_back(std::stoi(std::string(text.substr(pos, end - pos))), letter);
    pos = end;
  }
  if (spec.empty() && !saw_identity) {
    throw std::invalid_argument("PauliString: empty text");
  }
  PauliString p = from_spec(spec, num_qubits);
  p.phase_ = mod4(phase);
  return p;
}

std::complex<double> PauliString::phase() const { return kIPowers[phase_]; }

char PauliString::letter(int qubit) const {
  const uint32_t bit = qubit_bit(qubit);
  const bool x = x_ & bit;
  const bool z = z_ & bit;
  if (x && z) return 'Y';
  if (x) return 'X';
  if (z) return 'Z';
  return 'I';
}

int PauliString::weight() const { return std::popcount(x_ | z_); }

void PauliString::check_same_size(const PauliString& rhs) const {
  if (n_ != rhs.n_) {
    throw std::invalid_argument("PauliString: qubit count mismatch");
  }
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  check_same_size(rhs);
  int k = phase_ + rhs.phase_;
  for (int b = 0; b < n_; ++b) {
    k += product_exponent((x_ >> b) & 1, (z_ >> b) & 1, (rhs.x_ >> b) & 1,
                          (rhs.z_ >> b) & 1);
  }
  return PauliString(n_, x_ ^ rhs.x_, z_ ^ rhs.z_, k);
}

PauliString PauliString::with_phase_power(int k) const {
  return PauliString(n_, x_, z_, k);
}

PauliString PauliString::dagger() const {
  return PauliString(n_, x_, z_, -phase_);
}

bool PauliString::commutes(const PauliString& rhs) const {
  check_same_size(rhs);
  return (std::popcount((x_ & rhs.z_) ^ (z_ & rhs.x_)) & 1) == 0;
}

int PauliString::z_sign(uint32_t b) const {
  return (std::popcount(b & z_) & 1) ? -1 : 1;
}

std::pair<uint32_t, std::complex<double>> PauliString::act_on_basis(
    uint32_t b) const {
  // Y = iXZ: the Z part acts first, each Y contributes a factor i.
  const int k = phase_ + std::popcount(x_ & z_) + ((std::popcount(b & z_) & 1) ? 2 : 0);
  return {b ^ x_, kIPowers[mod4(k)]};
}

std::string PauliString::str() const {
  std::ostringstream os;
  static constexpr const char* kPrefix[4] = {"", "i", "-", "-i"};
  os << kPrefix[phase_];
  if (is_identity_up_to_phase()) {
    os << 'I';
    return os.str();
  }
  bool first = true;
  for (int q = 1; q <= n_; ++q) {
    const char c = letter(q);
    if (c == 'I') continue;
    if (!first) os << ' ';
    os << c << q;
    first = false;
  }
  return os.str();
}

StateVector apply_to_state(const PauliString& p, const StateVector& psi) {
  if (psi.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument("apply_to_state: dimension mismatch");
  }
  const CVector& in = psi.amplitudes();
  CVector out(in.size());
  for (Eigen::Index b = 0; b < in.size(); ++b) {
    const auto [target, coef] = p.act_on_basis(static_cast<uint32_t>(b));
    out[target] = coef * in[b];
  }
  return StateVector(std::move(out));
}

std::vector<std::complex<double>> dense_matrix(const PauliString& p) {
  const size_t dim = size_t{1} << p.num_qubits();
  std::vector<std::complex<double>> m(dim * dim);
  for (size_t b = 0; b < dim; ++b) {
    const auto [target, coef] = p.act_on_basis(static_cast<uint32_t>(b));
    m[target * dim + b] = coef;
  }
  return m;
}

}  // namespace shorrabi
