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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace qcap {

using Complex = std::complex<double>;

/// Dense square complex matrix, row-major. The substrate for density
/// operators and gate unitaries. All values are immutable-by-convention:
/// operations return new matrices.
class ComplexMatrix {
 public:
  /// Zero matrix of the given dimension. Throws std::invalid_argument if
  /// dim == 0.
  explicit ComplexMatrix(std::size_t dim);

  /// Row-major entries; entries.size() must equal dim*dim.
  ComplexMatrix(std::size_t dim, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Complex& operator()(std::size_t row, std::size_t col) noexcept {
    return entries_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const noexcept {
    return entries_[row * dim_ + col];
  }

  std::span<const Complex> entries() const noexcept { return entries_; }
  std::span<Complex> entries() noexcept { return entries_; }

  ComplexMatrix adjoint() const;
  Complex trace() const noexcept;
  double frobenius_norm() const noexcept;

  /// max_{rc} |a(r,c) - b(r,c)|; dimensions must match.
  double max_abs_diff(const ComplexMatrix& other) const;

  /// max entry of |m - m^dagger|.
  double hermiticity_defect() const noexcept;
  bool is_hermitian(double tol) const noexcept { return hermiticity_defect() <= tol; }

  /// max entry of |u^dagger u - I|.
  double unitarity_defect() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale) noexcept;

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix m, Complex scale) { return m *= scale; }
  friend ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);

  /// Bit-identical comparison (used by determinism checks).
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  /// Kronecker product, a's indices major.
  static ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

 private:
  std::size_t dim_;
  std::vector<Complex> entries_;
};

/// m * v for a dim-sized vector.
std::vector<Complex> apply(const ComplexMatrix& m, std::span<const Complex> v);

}  // namespace qcap
