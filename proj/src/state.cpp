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

#include "qcap/state.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qcap/hermitian_eigen.hpp"
#include "qcap/tolerances.hpp"

namespace qcap {

StateVector::StateVector(std::vector<Complex> amplitudes) : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw std::invalid_argument("StateVector: dimension must be >= 1");
  const double n2 = norm_squared();
  if (std::abs(n2 - 1.0) > kUnitNormTol) {
    throw std::invalid_argument("StateVector: squared norm " + std::to_string(n2) +
                                " is not 1 within 1e-10");
  }
}

StateVector StateVector::basis_state(std::size_t dim, std::size_t index) {
  if (index >= dim) throw std::invalid_argument("StateVector::basis_state: index out of range");
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(std::move(amps));
}

double StateVector::norm_squared() const noexcept {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return sum;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("inner_product: dimension mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

DensityMatrix::DensityMatrix(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.hermiticity_defect() > kHermitianTol) {
    throw std::invalid_argument("DensityMatrix: not Hermitian within 1e-9");
  }
  const double tr = m_.trace().real();
  if (std::abs(tr - 1.0) > kUnitTraceTol) {
    throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) +
                                " is not 1 within 1e-9");
  }
}

double DensityMatrix::purity() const noexcept {
  // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  double sum = 0.0;
  for (const Complex& z : m_.entries()) sum += std::norm(z);
  return sum;
}

DensityMatrix pure_density(const StateVector& psi) {
  const std::size_t n = psi.dim();
  ComplexMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  return DensityMatrix(std::move(m));
}

DensityMatrix single_qubit_mixed(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("single_qubit_mixed: p must be in [0,1]");
  }
  ComplexMatrix m(2);
  m(0, 0) = p;
  m(1, 1) = 1.0 - p;
  return DensityMatrix(std::move(m));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(ComplexMatrix::kron(a.matrix(), b.matrix()));
}

DensityMatrix initial_register_state(int n_qubits, double p) {
  if (n_qubits < 1 || n_qubits > 10) {
    throw std::invalid_argument("initial_register_state: n_qubits must be in [1,10]");
  }
  DensityMatrix qubit = single_qubit_mixed(p);
  DensityMatrix state = qubit;
  for (int i = 1; i < n_qubits; ++i) state = tensor(state, qubit);
  return state;
}

double spectrum_entropy_bits(std::span<const double> eigenvalues) {
  double bits = 0.0;
  for (const double lambda : eigenvalues) {
    if (lambda < -kNegativeEigTol) {
      throw std::invalid_argument("spectrum_entropy_bits: eigenvalue " + std::to_string(lambda) +
                                  " below -1e-9; state is not positive semidefinite");
    }
    if (lambda < kEigClip) continue;  // clipped to zero, 0 log 0 = 0
    bits -= lambda * std::log2(lambda);
  }
  return std::max(bits, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  const HermitianEigen eig = hermitian_eigen(rho.matrix());
  const double bits = spectrum_entropy_bits(eig.eigenvalues);
  return std::min(bits, std::log2(static_cast<double>(rho.dim())));
}

namespace {

// sqrt with the sub-clip band zeroed: analytically-zero eigenvalues computed
// as O(1e-16) dust would otherwise leak O(1e-8) into the trace through the
// square root. Genuinely negative spectra still surface as a domain error.
double clipped_sqrt(double x) {
  if (x >= 0.0 && x < kEigClip) return 0.0;
  return std::sqrt(x);
}

double fidelity_general(const DensityMatrix& sigma, const DensityMatrix& rho) {
  const ComplexMatrix sqrt_rho = apply_spectral_function(rho.matrix(), clipped_sqrt);
  const ComplexMatrix inner = sqrt_rho * sigma.matrix() * sqrt_rho;
  const ComplexMatrix root = apply_spectral_function(inner, clipped_sqrt);
  return root.trace().real();
}

}  // namespace

double fidelity(const DensityMatrix& sigma, const DensityMatrix& rho) {
  if (sigma.dim() != rho.dim()) throw std::invalid_argument("fidelity: dimension mismatch");

  double f;
  // Rank-1 shortcut: F(|psi><psi|, rho) = sqrt(<psi|rho|psi>) = sqrt(tr(sigma rho)).
  if (sigma.purity() >= 1.0 - kEigClip || rho.purity() >= 1.0 - kEigClip) {
    Complex overlap = 0.0;
    const std::size_t n = sigma.dim();
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) overlap += sigma.matrix()(r, c) * rho.matrix()(c, r);
    f = std::sqrt(std::max(overlap.real(), 0.0));
  } else {
    f = fidelity_general(sigma, rho);
  }
  return std::clamp(f, 0.0, 1.0);
}

double bures_distance(const DensityMatrix& sigma, const DensityMatrix& rho) {
  const double f = fidelity(sigma, rho);
  return std::sqrt(std::max(1.0 - f * f, 0.0));
}

}  // namespace qcap
