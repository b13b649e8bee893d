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

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcap/complex_matrix.hpp"

namespace qcap {

/// Eigendecomposition of a Hermitian matrix: m = V diag(lambda) V^dagger with
/// eigenvalues in non-decreasing order and orthonormal eigenvector columns.
struct HermitianEigen {
  std::vector<double> eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Thrown when an iterative kernel fails to converge. Carries the residual
/// (off-diagonal Frobenius norm) reached when the iteration cap was hit.
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Cyclic-Jacobi eigendecomposition for Hermitian matrices.
///
/// The input is symmetrized via (m + m^dagger)/2 before decomposing; inputs
/// whose hermiticity defect exceeds 1e-9 are rejected with
/// std::invalid_argument. Sweeps run in a fixed row-cyclic order, so the
/// output is deterministic: identical input bits give identical output bits.
/// Convergence requires the off-diagonal Frobenius norm to drop below
/// 1e-12 * (1 + ||m||_F) within 100 sweeps; otherwise a NumericalError with
/// the final residual is thrown.
HermitianEigen hermitian_eigen(const ComplexMatrix& m);

/// V diag(f(lambda)) V^dagger for Hermitian m. Eigenvalues in [-1e-12, 0) are
/// clipped to 0 before f is applied. If f produces a non-finite value at some
/// (clipped) eigenvalue, throws std::domain_error naming that eigenvalue.
ComplexMatrix apply_spectral_function(const ComplexMatrix& m,
                                      const std::function<double(double)>& f);

}  // namespace qcap
