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

#include "qcap/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "qcap/tolerances.hpp"

namespace qcap {
namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) sum += std::norm(a(r, c));
  return std::sqrt(sum);
}

// One complex Jacobi rotation zeroing a(p,q). The rotation first phases the
// pivot real, then applies the classic symmetric Schur rotation; both are
// folded into the single unitary
//   U(p,p) = c         U(p,q) = s
//   U(q,p) = -s e^-if  U(q,q) = c e^-if
// with e^if = a(p,q)/|a(p,q)|. Updates a <- U^dagger a U and v <- v U.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag < 1e-300) return;  // nothing to annihilate
  const Complex phase = apq / mag;

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;

  const Complex e_min = std::conj(phase);  // e^-if
  const Complex e_pls = phase;             // e^+if

  const std::size_t n = a.dim();

  // Row update: a <- U^dagger a.
  for (std::size_t j = 0; j < n; ++j) {
    const Complex rp = a(p, j);
    const Complex rq = a(q, j);
    a(p, j) = c * rp - s * e_pls * rq;
    a(q, j) = s * rp + c * e_pls * rq;
  }
  // Column update: a <- a U.
  for (std::size_t i = 0; i < n; ++i) {
    const Complex cp = a(i, p);
    const Complex cq = a(i, q);
    a(i, p) = c * cp - s * e_min * cq;
    a(i, q) = s * cp + c * e_min * cq;
  }
  // The pivot pair is annihilated by construction; pin the roundoff.
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = Complex(a(p, p).real(), 0.0);
  a(q, q) = Complex(a(q, q).real(), 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    const Complex cp = v(i, p);
    const Complex cq = v(i, q);
    v(i, p) = c * cp - s * e_min * cq;
    v(i, q) = s * cp + c * e_min * cq;
  }
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& m) {
  if (m.hermiticity_defect() > kHermitianTol) {
    throw std::invalid_argument("hermitian_eigen: input is not Hermitian within 1e-9");
  }

  const std::size_t n = m.dim();
  const double threshold = kJacobiRelThreshold * (1.0 + m.frobenius_norm());

  // Symmetrize so the iteration sees an exactly Hermitian matrix.
  ComplexMatrix a(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));

  ComplexMatrix v = ComplexMatrix::identity(n);

  double residual = off_diagonal_norm(a);
  int sweep = 0;
  while (residual >= threshold) {
    if (sweep == kJacobiMaxSweeps) {
      throw NumericalError("hermitian_eigen: no convergence after 100 sweeps, residual " +
                               std::to_string(residual),
                           residual);
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweep;
    residual = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });

  HermitianEigen out{std::vector<double>(n), ComplexMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.eigenvectors(i, k) = v(i, order[k]);
  }
  return out;
}

ComplexMatrix apply_spectral_function(const ComplexMatrix& m,
                                      const std::function<double(double)>& f) {
  const HermitianEigen eig = hermitian_eigen(m);
  const std::size_t n = m.dim();

  std::vector<double> mapped(n);
  for (std::size_t k = 0; k < n; ++k) {
    double lambda = eig.eigenvalues[k];
    if (lambda < 0.0 && lambda >= -kEigClip) lambda = 0.0;
    const double w = f(lambda);
    if (!std::isfinite(w)) {
      throw std::domain_error("apply_spectral_function: f undefined at eigenvalue " +
                              std::to_string(lambda));
    }
    mapped[k] = w;
  }

  // V diag(mapped) V^dagger, accumulated column by column.
  ComplexMatrix out(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (mapped[k] == 0.0) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex scaled = mapped[k] * eig.eigenvectors(r, k);
      for (std::size_t c = 0; c < n; ++c) {
        out(r, c) += scaled * std::conj(eig.eigenvectors(c, k));
      }
    }
  }
  return out;
}

}  // namespace qcap
