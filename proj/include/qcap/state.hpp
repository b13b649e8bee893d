// Copyright 2026 The qcap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <span>
#include <vector>

#include "qcap/complex_matrix.hpp"

namespace qcap {

/// Unit-norm pure state of the computational register. The fast path for
/// fully pure runs; mixed runs use DensityMatrix.
class StateVector {
 public:
  /// Throws std::invalid_argument unless | ||amps||^2 - 1 | <= 1e-10.
  explicit StateVector(std::vector<Complex> amplitudes);

  static StateVector basis_state(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const noexcept { return amps_[i]; }

  double norm_squared() const noexcept;

  friend bool operator==(const StateVector& a, const StateVector& b) {
    return a.amps_ == b.amps_;
  }

 private:
  std::vector<Complex> amps_;
};

/// <a|b> with the left argument conjugated.
Complex inner_product(const StateVector& a, const StateVector& b);

/// Hermitian, unit-trace state of the computational register. Hermiticity and
/// trace are validated at construction (1e-9); positivity is enforced where
/// the spectrum is actually computed (entropy, fidelity), where an eigenvalue
/// below -1e-9 rejects the state.
class DensityMatrix {
 public:
  explicit DensityMatrix(ComplexMatrix m);

  std::size_t dim() const noexcept { return m_.dim(); }
  const ComplexMatrix& matrix() const noexcept { return m_; }

  /// Re tr(rho^2); 1 for pure states.
  double purity() const noexcept;

 private:
  ComplexMatrix m_;
};

/// |psi><psi|.
DensityMatrix pure_density(const StateVector& psi);

/// p|0><0| + (1-p)|1><1|. Throws std::invalid_argument for p outside [0,1].
DensityMatrix single_qubit_mixed(double p);

/// Kronecker product of states, a's indices major (qubit 0 is the most
/// significant bit of the basis index).
DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

/// n-fold tensor power of single_qubit_mixed(p). Supported range
/// 1 <= n_qubits <= 10.
DensityMatrix initial_register_state(int n_qubits, double p);

/// -sum lambda log2 lambda over the clipped spectrum, in bits. Eigenvalues in
/// [-1e-9, 1e-12) count as 0; below -1e-9 the state is rejected. Result is
/// clamped to [0, log2 dim].
double von_neumann_entropy(const DensityMatrix& rho);

/// Entropy in bits of a raw spectrum, applying the same clipping rules as
/// von_neumann_entropy. Shared by the ensemble-level joint-entropy path.
double spectrum_entropy_bits(std::span<const double> eigenvalues);

/// Uhlmann fidelity tr sqrt(sqrt(rho) sigma sqrt(rho)), clamped to [0,1].
/// When either argument is pure the rank-1 shortcut sqrt(tr(sigma rho)) is
/// used; it agrees with the general spectral path within 1e-9.
double fidelity(const DensityMatrix& sigma, const DensityMatrix& rho);

/// sqrt(1 - F^2).
double bures_distance(const DensityMatrix& sigma, const DensityMatrix& rho);

}  // namespace qcap
