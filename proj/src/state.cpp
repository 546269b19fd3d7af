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

#include "shorrabi/state.hpp"

#include <cmath>
#include <iomanip>
#include <istream>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "shorrabi/pauli.hpp"

namespace shorrabi {

namespace {

int log2_dim(Eigen::Index dim, const char* what) {
  if (dim < 2 || (dim & (dim - 1)) != 0) {
    throw std::invalid_argument(std::string(what) + ": dimension must be a power of two");
  }
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  return n;
}

constexpr double kNormTol = 1e-10;

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

}  // namespace

StateVector::StateVector(CVector amplitudes)
    : n_(log2_dim(amplitudes.size(), "StateVector")), amps_(std::move(amplitudes)) {
  const double norm = amps_.norm();
  if (!(std::abs(norm - 1.0) <= kNormTol)) {
    throw std::invalid_argument("StateVector: amplitudes are not normalized");
  }
}

StateVector StateVector::normalized(CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("StateVector: zero vector");
  amplitudes /= norm;
  return StateVector(std::move(amplitudes));
}

StateVector StateVector::basis(int num_qubits, uint32_t index) {
  CVector v = CVector::Zero(Eigen::Index{1} << num_qubits);
  if (index >= static_cast<uint32_t>(v.size())) {
    throw std::invalid_argument("StateVector::basis: index out of range");
  }
  v[index] = 1.0;
  return StateVector(std::move(v));
}

Complex StateVector::inner(const StateVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("inner: dimension mismatch");
  return amps_.dot(other.amps_);
}

DensityMatrix::DensityMatrix(int n, CMatrix elements) : n_(n), rho_(std::move(elements)) {}

DensityMatrix::DensityMatrix(CMatrix elements)
    : n_(log2_dim(elements.rows(), "DensityMatrix")), rho_(std::move(elements)) {
  if (rho_.rows() != rho_.cols()) throw std::invalid_argument("DensityMatrix: not square");
  if (hermiticity_error() > kNormTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian");
  }
  if (std::abs(rho_.trace() - Complex(1.0)) > kNormTol) {
    throw std::invalid_argument("DensityMatrix: trace is not 1");
  }
}

DensityMatrix DensityMatrix::unchecked(CMatrix elements) {
  const int n = log2_dim(elements.rows(), "DensityMatrix");
  return DensityMatrix(n, std::move(elements));
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  const Eigen::Index dim = Eigen::Index{1} << num_qubits;
  return DensityMatrix(num_qubits, CMatrix::Identity(dim, dim) / static_cast<double>(dim));
}

double DensityMatrix::purity() const {
  // tr(rho^2) = sum |rho_ab|^2 for Hermitian rho.
  return rho_.squaredNorm();
}

double DensityMatrix::hermiticity_error() const {
  return (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<CMatrix> es(rho_, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

DensityMatrix& DensityMatrix::operator+=(const DensityMatrix& other) {
  rho_ += other.rho_;
  return *this;
}

DensityMatrix density_from_pure(const StateVector& psi) {
  return DensityMatrix::unchecked(psi.amplitudes() * psi.amplitudes().adjoint());
}

double trace_norm_hermitian(const CMatrix& h) {
  const int dim = static_cast<int>(h.rows());
  DisjointSets sets(dim);
  for (int c = 0; c < dim; ++c) {
    for (int r = 0; r < c; ++r) {
      if (h(r, c) != Complex(0.0) || h(c, r) != Complex(0.0)) sets.unite(r, c);
    }
  }
  std::vector<std::vector<int>> blocks(dim);
  for (int i = 0; i < dim; ++i) blocks[sets.find(i)].push_back(i);

  double total = 0.0;
  for (const auto& idx : blocks) {
    const auto size = static_cast<Eigen::Index>(idx.size());
    if (size == 0) continue;
    if (size == 1) {
      total += std::abs(h(idx[0], idx[0]).real());
      continue;
    }
    CMatrix block(size, size);
    for (Eigen::Index j = 0; j < size; ++j) {
      for (Eigen::Index i = 0; i < size; ++i) block(i, j) = h(idx[i], idx[j]);
    }
    Eigen::SelfAdjointEigenSolver<CMatrix> es(block, Eigen::EigenvaluesOnly);
    total += es.eigenvalues().cwiseAbs().sum();
  }
  return total;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) throw std::invalid_argument("trace_distance: dimension mismatch");
  return 0.5 * trace_norm_hermitian(rho.matrix() - sigma.matrix());
}

Complex expectation_complex(const PauliString& p, const DensityMatrix& rho) {
  if (rho.num_qubits() != p.num_qubits()) {
    throw std::invalid_argument("expectation: dimension mismatch");
  }
  // tr(P rho) = sum_c <c|P rho|c> with P|c> = coef(c)|c ^ x>.
  Complex sum = 0.0;
  const CMatrix& m = rho.matrix();
  for (Eigen::Index c = 0; c < rho.dim(); ++c) {
    const auto [target, coef] = p.act_on_basis(static_cast<uint32_t>(c));
    sum += coef * m(c, target);
  }
  return sum;
}

double expectation(const PauliString& p, const DensityMatrix& rho) {
  return expectation_complex(p, rho).real();
}

double fidelity_up_to_phase(const StateVector& psi, const StateVector& phi) {
  return std::min(1.0, std::abs(psi.inner(phi)));
}

double max_amplitude_deviation(const StateVector& psi, const StateVector& phi) {
  if (psi.dim() != phi.dim()) throw std::invalid_argument("dimension mismatch");
  return (psi.amplitudes() - phi.amplitudes()).cwiseAbs().maxCoeff();
}

namespace {

void write_line(std::ostream& os, Eigen::Index i, Complex v) {
  os << i << ' ' << v.real() << ' ' << v.imag() << '\n';
}

CVector read_flat(std::istream& is) {
  std::vector<std::pair<long long, Complex>> rows;
  long long idx;
  double re, im;
  while (is >> idx >> re >> im) rows.emplace_back(idx, Complex(re, im));
  if (!is.eof()) throw std::invalid_argument("state text: malformed line");
  CVector v = CVector::Zero(static_cast<Eigen::Index>(rows.size()));
  std::vector<bool> seen(rows.size(), false);
  for (const auto& [i, val] : rows) {
    if (i < 0 || i >= static_cast<long long>(rows.size()) || seen[i]) {
      throw std::invalid_argument("state text: bad index " + std::to_string(i));
    }
    seen[i] = true;
    v[i] = val;
  }
  return v;
}

}  // namespace

void write_text(std::ostream& os, const StateVector& psi) {
  const auto old = os.precision(17);
  for (Eigen::Index i = 0; i < psi.dim(); ++i) write_line(os, i, psi[i]);
  os.precision(old);
}

void write_text(std::ostream& os, const DensityMatrix& rho) {
  const auto old = os.precision(17);
  for (Eigen::Index r = 0; r < rho.dim(); ++r) {
    for (Eigen::Index c = 0; c < rho.dim(); ++c) write_line(os, r * rho.dim() + c, rho(r, c));
  }
  os.precision(old);
}

StateVector read_state_text(std::istream& is) { return StateVector(read_flat(is)); }

DensityMatrix read_density_text(std::istream& is) {
  CVector flat = read_flat(is);
  const auto dim = static_cast<Eigen::Index>(std::llround(std::sqrt(static_cast<double>(flat.size()))));
  if (dim * dim != flat.size()) throw std::invalid_argument("density text: not square");
  CMatrix m(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) m(r, c) = flat[r * dim + c];
  }
  return DensityMatrix(std::move(m));
}

}  // namespace shorrabi
