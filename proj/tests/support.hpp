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

// Test-only helpers and independent oracles. Everything here is deliberately
// naive (cofactor determinants, dense Kronecker gates, brute-force evolution)
// so it stays independent of the library's optimized paths.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "qcap/complex_matrix.hpp"
#include "qcap/ensemble.hpp"
#include "qcap/grover.hpp"
#include "qcap/state.hpp"

namespace qcap::test {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double normal() {
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * uniform());
  }
  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }

 private:
  std::mt19937_64 gen_;
};

inline ComplexMatrix random_hermitian(Rng& rng, std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    m(r, r) = rng.normal();
    for (std::size_t c = r + 1; c < dim; ++c) {
      const Complex z(rng.normal(), rng.normal());
      m(r, c) = z;
      m(c, r) = std::conj(z);
    }
  }
  return m;
}

inline StateVector random_pure_state(Rng& rng, std::size_t dim) {
  std::vector<Complex> amps(dim);
  double norm = 0.0;
  for (Complex& a : amps) {
    a = Complex(rng.normal(), rng.normal());
    norm += std::norm(a);
  }
  norm = std::sqrt(norm);
  for (Complex& a : amps) a /= norm;
  return StateVector(std::move(amps));
}

inline DensityMatrix random_density(Rng& rng, std::size_t dim) {
  ComplexMatrix g(dim);
  for (Complex& z : g.entries()) z = Complex(rng.normal(), rng.normal());
  ComplexMatrix rho = g * g.adjoint();
  rho *= Complex(1.0 / rho.trace().real(), 0.0);
  for (std::size_t r = 0; r < dim; ++r) {
    rho(r, r) = Complex(rho(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const Complex avg = 0.5 * (rho(r, c) + std::conj(rho(c, r)));
      rho(r, c) = avg;
      rho(c, r) = std::conj(avg);
    }
  }
  return DensityMatrix(std::move(rho));
}

/// Cofactor-expansion determinant; fine for the dims <= 4 it is used at.
inline Complex cofactor_determinant(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  if (n == 1) return m(0, 0);
  Complex det = 0.0;
  double sign = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    ComplexMatrix minor(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == col) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    det += sign * m(0, col) * cofactor_determinant(minor);
    sign = -sign;
  }
  return det;
}

/// Dense n-qubit Hadamard built by explicit Kronecker powers.
inline ComplexMatrix dense_hadamard(int n_qubits) {
  ComplexMatrix h1(2);
  const double s = 1.0 / std::sqrt(2.0);
  h1(0, 0) = s;
  h1(0, 1) = s;
  h1(1, 0) = s;
  h1(1, 1) = -s;
  ComplexMatrix h = h1;
  for (int i = 1; i < n_qubits; ++i) h = ComplexMatrix::kron(h, h1);
  return h;
}

inline ComplexMatrix sign_flip_diag(std::size_t dim, std::size_t index) {
  ComplexMatrix d = ComplexMatrix::identity(dim);
  d(index, index) = -1.0;
  return d;
}

inline GroverConfig trace_cfg(int n_qubits, double purity, int n_blocks) {
  GroverConfig cfg;
  cfg.n_qubits = n_qubits;
  cfg.purity = purity;
  cfg.n_blocks = n_blocks;
  return cfg;
}

inline double binary_entropy(double p) {
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

/// Brute-force reference for the block evolution: every branch is a dense
/// density matrix and every gate a dense matrix product. Returns the
/// mutual-information series I(0..blocks) computed from ensemble averages.
inline std::vector<double> reference_capacity_series(int n_qubits, double p, int blocks) {
  const std::size_t n = std::size_t{1} << n_qubits;
  const ComplexMatrix h = dense_hadamard(n_qubits);
  const ComplexMatrix f0 = sign_flip_diag(n, 0);

  ComplexMatrix rho0(1, {Complex(1.0)});
  ComplexMatrix qubit(2);
  qubit(0, 0) = p;
  qubit(1, 1) = 1.0 - p;
  for (int q = 0; q < n_qubits; ++q) rho0 = ComplexMatrix::kron(rho0, qubit);

  std::vector<ComplexMatrix> branches(n, rho0);
  const double s_branch = von_neumann_entropy(DensityMatrix(rho0));

  const auto average = [&]() {
    ComplexMatrix acc(n);
    for (const ComplexMatrix& b : branches) acc += b;
    acc *= Complex(1.0 / static_cast<double>(n), 0.0);
    return DensityMatrix(acc);
  };

  std::vector<double> series;
  series.push_back(0.0);
  for (int k = 1; k <= blocks; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const ComplexMatrix oracle = sign_flip_diag(n, i);
      ComplexMatrix b = h * branches[i] * h;
      b = oracle * b * oracle;
      b = h * b * h;
      b = f0 * b * f0;
      branches[i] = b;
    }
    series.push_back(von_neumann_entropy(average()) - s_branch);
  }
  return series;
}

}  // namespace qcap::test
