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

#include <stdexcept>
#include <vector>

#include "shorrabi/kernels.hpp"

namespace shorrabi::kernels::serial {

namespace {

using Index = Eigen::Index;

// Index with a zero inserted at position `bit` (a power of two).
inline Index insert_zero(Index j, Index bit) {
  return ((j & ~(bit - 1)) << 1) | (j & (bit - 1));
}

struct PauliAction {
  std::vector<uint32_t> target;
  std::vector<Complex> coef;
};

PauliAction tabulate(const PauliString& p, Index dim) {
  if ((Index{1} << p.num_qubits()) != dim) {
    throw std::invalid_argument("kernel: Pauli size does not match matrix");
  }
  PauliAction act{std::vector<uint32_t>(dim), std::vector<Complex>(dim)};
  for (Index b = 0; b < dim; ++b) {
    const auto [t, c] = p.act_on_basis(static_cast<uint32_t>(b));
    act.target[b] = t;
    act.coef[b] = c;
  }
  return act;
}

}  // namespace

void conjugate_diagonal(CMatrix& rho, const CVector& u) {
  const Index dim = rho.rows();
  if (u.size() != dim) throw std::invalid_argument("conjugate_diagonal: size mismatch");
  Complex* data = rho.data();
  const Complex* uu = u.data();
  for (Index b = 0; b < dim; ++b) {
    const Complex ub = std::conj(uu[b]);
    Complex* col = data + b * dim;
    for (Index a = 0; a < dim; ++a) col[a] *= uu[a] * ub;
  }
}

void depolarize_bit(CMatrix& rho, uint32_t bit, double p) {
  const Index dim = rho.rows();
  const Index m = bit;
  const double keep = 1.0 - 2.0 * p / 3.0;
  const double move = 2.0 * p / 3.0;
  const double off = 1.0 - 4.0 * p / 3.0;
  Complex* data = rho.data();
  for (Index jb = 0; jb < dim / 2; ++jb) {
    const Index b0 = insert_zero(jb, m);
    Complex* c0 = data + b0 * dim;
    Complex* c1 = data + (b0 | m) * dim;
    for (Index ja = 0; ja < dim / 2; ++ja) {
      const Index a0 = insert_zero(ja, m);
      const Index a1 = a0 | m;
      const Complex d00 = c0[a0];
      const Complex d11 = c1[a1];
      c0[a0] = keep * d00 + move * d11;
      c1[a1] = keep * d11 + move * d00;
      c0[a1] *= off;
      c1[a0] *= off;
    }
  }
}

void depolarize_all(CMatrix& rho, int num_qubits, double p) {
  for (int q = 0; q < num_qubits; ++q) depolarize_bit(rho, uint32_t{1} << q, p);
}

void conjugate_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out) {
  const Index dim = rho.rows();
  const PauliAction act = tabulate(p, dim);
  out.resize(dim, dim);
  const Complex* in = rho.data();
  Complex* o = out.data();
  for (Index b = 0; b < dim; ++b) {
    const Complex cb = std::conj(act.coef[b]);
    Complex* ocol = o + Index{act.target[b]} * dim;
    const Complex* icol = in + b * dim;
    for (Index a = 0; a < dim; ++a) ocol[act.target[a]] = act.coef[a] * icol[a] * cb;
  }
}

void left_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out) {
  const Index dim = rho.rows();
  const PauliAction act = tabulate(p, dim);
  out.resize(dim, dim);
  const Complex* in = rho.data();
  Complex* o = out.data();
  for (Index b = 0; b < dim; ++b) {
    Complex* ocol = o + b * dim;
    const Complex* icol = in + b * dim;
    for (Index a = 0; a < dim; ++a) ocol[act.target[a]] = act.coef[a] * icol[a];
  }
}

void right_multiply_pauli(const CMatrix& rho, const PauliString& p, CMatrix& out) {
  const Index dim = rho.rows();
  const PauliAction act = tabulate(p, dim);
  out.resize(dim, dim);
  const Complex* in = rho.data();
  Complex* o = out.data();
  for (Index b = 0; b < dim; ++b) {
    const Complex cb = act.coef[b];
    Complex* ocol = o + b * dim;
    const Complex* icol = in + Index{act.target[b]} * dim;
    for (Index a = 0; a < dim; ++a) ocol[a] = icol[a] * cb;
  }
}

void diagonal_syndrome_correct(const CMatrix& rho, std::span<const uint16_t> syndrome,
                               std::span<const uint32_t> correction, CMatrix& out) {
  const Index dim = rho.rows();
  if (static_cast<Index>(syndrome.size()) != dim) {
    throw std::invalid_argument("diagonal_syndrome_correct: syndrome table size");
  }
  std::vector<std::vector<uint32_t>> classes(correction.size());
  for (Index b = 0; b < dim; ++b) {
    if (syndrome[b] >= correction.size()) {
      throw std::invalid_argument("diagonal_syndrome_correct: syndrome out of range");
    }
    classes[syndrome[b]].push_back(static_cast<uint32_t>(b));
  }
  out.setZero(dim, dim);
  const Complex* in = rho.data();
  Complex* o = out.data();
  for (size_t s = 0; s < classes.size(); ++s) {
    const std::vector<uint32_t>& members = classes[s];
    const uint32_t c = correction[s];
    const Index count = static_cast<Index>(members.size());
    for (Index jb = 0; jb < count; ++jb) {
      const uint32_t b = members[jb];
      const Complex* icol = in + Index{b} * dim;
      Complex* ocol = o + Index{b ^ c} * dim;
      for (const uint32_t a : members) ocol[a ^ c] += icol[a];
    }
  }
}

void conjugate_diagonal_classes(CMatrix& rho, const CVector& u, std::span<const uint32_t> classes) {
  const Index dim = rho.rows();
  if (u.size() != dim) throw std::invalid_argument("conjugate_diagonal_classes: size mismatch");
  Complex* data = rho.data();
  const Complex* uu = u.data();
  const Index nc = static_cast<Index>(classes.size());
  for (Index k = 0; k < nc; ++k) {
    const Index d = classes[k];
    for (Index a = 0; a < dim; ++a) {
      const Index b = a ^ d;
      data[b * dim + a] *= uu[a] * std::conj(uu[b]);
    }
  }
}

void depolarize_all_classes(CMatrix& rho, int num_qubits, double p,
                            std::span<const uint32_t> classes) {
  const Index dim = rho.rows();
  const double keep = 1.0 - 2.0 * p / 3.0;
  const double move = 2.0 * p / 3.0;
  const double off = 1.0 - 4.0 * p / 3.0;
  Complex* data = rho.data();
  const Index nc = static_cast<Index>(classes.size());
  for (Index k = 0; k < nc; ++k) {
    const Index d = classes[k];
    for (int q = 0; q < num_qubits; ++q) {
      const Index m = Index{1} << q;
      for (Index j = 0; j < dim / 2; ++j) {
        const Index a0 = insert_zero(j, m);
        const Index a1 = a0 | m;
        Complex& e0 = data[(a0 ^ d) * dim + a0];
        Complex& e1 = data[(a1 ^ d) * dim + a1];
        if (d & m) {
          e0 *= off;
          e1 *= off;
        } else {
          const Complex d00 = e0;
          const Complex d11 = e1;
          e0 = keep * d00 + move * d11;
          e1 = keep * d11 + move * d00;
        }
      }
    }
  }
}

void diagonal_syndrome_correct_classes(CMatrix& rho, std::span<const uint16_t> syndrome,
                                       std::span<const uint32_t> correction,
                                       std::span<const uint32_t> classes) {
  const Index dim = rho.rows();
  if (static_cast<Index>(syndrome.size()) != dim) {
    throw std::invalid_argument("diagonal_syndrome_correct_classes: syndrome table size");
  }
  for (Index b = 0; b < dim; ++b) {
    if (syndrome[b] >= correction.size()) {
      throw std::invalid_argument("diagonal_syndrome_correct_classes: syndrome out of range");
    }
  }
  const Index nc = static_cast<Index>(classes.size());
  std::vector<Complex> saved(static_cast<size_t>(nc * dim));
  Complex* data = rho.data();
  for (Index k = 0; k < nc; ++k) {
    const Index d = classes[k];
    for (Index a = 0; a < dim; ++a) {
      Complex& e = data[(a ^ d) * dim + a];
      saved[k * dim + a] = e;
      e = 0.0;
    }
  }
  // A class is mapped onto itself (a and a ^ d get the same correction), so
  // classes can be processed independently.
  for (Index k = 0; k < nc; ++k) {
    const Index d = classes[k];
    for (Index a = 0; a < dim; ++a) {
      const Index b = a ^ d;
      const uint16_t s = syndrome[a];
      if (syndrome[b] != s) continue;
      const Index c = correction[s];
      data[(b ^ c) * dim + (a ^ c)] += saved[k * dim + a];
    }
  }
}

}  // namespace shorrabi::kernels::serial
