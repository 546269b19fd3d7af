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

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>

#include <Eigen/Dense>

namespace shorrabi {

using Complex = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

class PauliString;

/// Normalized pure state on n qubits, 2^n complex amplitudes.
class StateVector {
 public:
  /// Takes ownership of `amplitudes`; throws std::invalid_argument unless the
  /// length is a power of two and the 2-norm is 1 within 1e-10.
  explicit StateVector(CVector amplitudes);

  /// Rescales to unit norm. Throws on a zero vector.
  static StateVector normalized(CVector amplitudes);
  static StateVector basis(int num_qubits, uint32_t index);

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return amps_.size(); }
  const CVector& amplitudes() const { return amps_; }
  Complex operator[](Eigen::Index i) const { return amps_[i]; }

  /// Inner product <this|other>.
  Complex inner(const StateVector& other) const;

 private:
  int n_;
  CVector amps_;
};

/// Density operator on n qubits, dense 2^n x 2^n.
///
/// Public construction checks Hermiticity and unit trace within 1e-10.
/// Positivity is checked on demand by min_eigenvalue().
class DensityMatrix {
 public:
  explicit DensityMatrix(CMatrix elements);

  /// Wraps without validation. For kernels that preserve the invariants.
  static DensityMatrix unchecked(CMatrix elements);
  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return n_; }
  Eigen::Index dim() const { return rho_.rows(); }
  const CMatrix& matrix() const { return rho_; }
  CMatrix& mutable_matrix() { return rho_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return rho_(r, c); }

  Complex trace() const { return rho_.trace(); }
  double purity() const;
  double hermiticity_error() const;
  double min_eigenvalue() const;

  DensityMatrix& operator+=(const DensityMatrix& other);

 private:
  DensityMatrix(int n, CMatrix elements);
  int n_;
  CMatrix rho_;
};

DensityMatrix density_from_pure(const StateVector& psi);

/// Half the trace norm of rho - sigma, from a Hermitian eigendecomposition.
///
/// The difference is split into the connected components of its nonzero
/// pattern first; each component is diagonalized separately, which is an
/// exact permutation-similarity and keeps large structured cases cheap.
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

/// Sum of |eigenvalues| of a Hermitian matrix, block-decomposed as above.
double trace_norm_hermitian(const CMatrix& h);

/// tr(P rho). For Hermitian P the imaginary part is below 1e-12 and dropped.
double expectation(const PauliString& p, const DensityMatrix& rho);
Complex expectation_complex(const PauliString& p, const DensityMatrix& rho);

/// |<psi|phi>|, invariant under a global phase on either argument.
double fidelity_up_to_phase(const StateVector& psi, const StateVector& phi);

/// Largest |psi_i - phi_i|.
double max_amplitude_deviation(const StateVector& psi, const StateVector& phi);

// Flat text fixtures: one "index real imag" line per amplitude. Density
// matrices are flattened row-major (index = row * dim + col).
void write_text(std::ostream& os, const StateVector& psi);
void write_text(std::ostream& os, const DensityMatrix& rho);
StateVector read_state_text(std::istream& is);
DensityMatrix read_density_text(std::istream& is);

}  // namespace shorrabi
