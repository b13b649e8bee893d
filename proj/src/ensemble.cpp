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

#include "qcap/ensemble.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "qcap/hermitian_eigen.hpp"
#include "qcap/tolerances.hpp"

namespace qcap {

CqEnsemble::CqEnsemble(std::vector<double> priors, std::vector<StateVector> branches)
    : mode_(Mode::kPure),
      priors_(std::move(priors)),
      pure_(std::move(branches)),
      branch_entropies_(priors_.size(), 0.0) {
  validate();
}

CqEnsemble::CqEnsemble(std::vector<double> priors, std::vector<DensityMatrix> branches)
    : mode_(Mode::kMixed), priors_(std::move(priors)), mixed_(std::move(branches)) {
  validate();
  branch_entropies_.reserve(mixed_.size());
  for (const DensityMatrix& rho : mixed_) branch_entropies_.push_back(von_neumann_entropy(rho));
}

CqEnsemble::CqEnsemble(std::vector<double> priors, std::vector<DensityMatrix> branches,
                       std::vector<double> branch_entropies)
    : mode_(Mode::kMixed),
      priors_(std::move(priors)),
      mixed_(std::move(branches)),
      branch_entropies_(std::move(branch_entropies)) {
  validate();
  if (branch_entropies_.size() != priors_.size()) {
    throw std::invalid_argument("CqEnsemble: branch entropy count mismatch");
  }
}

void CqEnsemble::validate() const {
  const std::size_t n = priors_.size();
  if (n == 0) throw std::invalid_argument("CqEnsemble: at least one branch required");

  const std::size_t branches = (mode_ == Mode::kPure) ? pure_.size() : mixed_.size();
  if (branches != n) {
    throw std::invalid_argument("CqEnsemble: prior/branch count mismatch");
  }

  double sum = 0.0;
  for (const double p : priors_) {
    if (p < 0.0) throw std::invalid_argument("CqEnsemble: negative prior");
    sum += p;
  }
  if (std::abs(sum - 1.0) > kPriorSumTol) {
    throw std::invalid_argument("CqEnsemble: priors sum to " + std::to_string(sum) +
                                ", not 1 within 1e-10");
  }

  const std::size_t dim = branch_dim();
  if (mode_ == Mode::kPure) {
    for (const StateVector& psi : pure_)
      if (psi.dim() != dim) throw std::invalid_argument("CqEnsemble: branch dimension mismatch");
  } else {
    for (const DensityMatrix& rho : mixed_)
      if (rho.dim() != dim) throw std::invalid_argument("CqEnsemble: branch dimension mismatch");
  }
}

std::size_t CqEnsemble::branch_dim() const noexcept {
  return (mode_ == Mode::kPure) ? pure_.front().dim() : mixed_.front().dim();
}

const std::vector<StateVector>& CqEnsemble::pure_branches() const {
  if (mode_ != Mode::kPure) throw std::logic_error("CqEnsemble: not a pure-mode ensemble");
  return pure_;
}

const std::vector<DensityMatrix>& CqEnsemble::mixed_branches() const {
  if (mode_ != Mode::kMixed) throw std::logic_error("CqEnsemble: not a mixed-mode ensemble");
  return mixed_;
}

double CqEnsemble::weighted_branch_entropy() const noexcept {
  double sum = 0.0;
  for (std::size_t i = 0; i < priors_.size(); ++i) sum += priors_[i] * branch_entropies_[i];
  return sum;
}

CqEnsemble uniform_ensemble(int n_qubits, double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("uniform_ensemble: purity must be in [0,1]");
  }
  const int cap = (p == 1.0) ? 12 : 10;
  if (n_qubits < 1 || n_qubits > cap) {
    throw std::invalid_argument("uniform_ensemble: n_qubits out of supported range [1," +
                                std::to_string(cap) + "]");
  }
  const std::size_t n = std::size_t{1} << n_qubits;
  std::vector<double> priors(n, 1.0 / static_cast<double>(n));

  if (p == 1.0) {
    std::vector<StateVector> branches(n, StateVector::basis_state(n, 0));
    return CqEnsemble(std::move(priors), std::move(branches));
  }

  const DensityMatrix rho0 = initial_register_state(n_qubits, p);
  const double s0 = von_neumann_entropy(rho0);
  std::vector<DensityMatrix> branches(n, rho0);
  return CqEnsemble(std::move(priors), std::move(branches), std::vector<double>(n, s0));
}

DensityMatrix average_state(const CqEnsemble& e) {
  const std::size_t dim = e.branch_dim();
  ComplexMatrix acc(dim);
  if (e.mode() == CqEnsemble::Mode::kPure) {
    for (std::size_t i = 0; i < e.branch_count(); ++i) {
      const double p = e.priors()[i];
      if (p == 0.0) continue;
      const StateVector& psi = e.pure_branches()[i];
      for (std::size_t r = 0; r < dim; ++r) {
        const Complex w = p * psi[r];
        for (std::size_t c = 0; c < dim; ++c) acc(r, c) += w * std::conj(psi[c]);
      }
    }
  } else {
    for (std::size_t i = 0; i < e.branch_count(); ++i) {
      const double p = e.priors()[i];
      if (p == 0.0) continue;
      const ComplexMatrix& rho = e.mixed_branches()[i].matrix();
      for (std::size_t j = 0; j < dim * dim; ++j) acc.entries()[j] += p * rho.entries()[j];
    }
  }
  return DensityMatrix(std::move(acc));
}

double holevo_mutual_information(const CqEnsemble& e, EntropyAudit audit) {
  const double s_avg = von_neumann_entropy(average_state(e));
  double s_branch = 0.0;
  if (audit == EntropyAudit::kRecompute && e.mode() == CqEnsemble::Mode::kMixed) {
    for (std::size_t i = 0; i < e.branch_count(); ++i) {
      s_branch += e.priors()[i] * von_neumann_entropy(e.mixed_branches()[i]);
    }
  } else {
    s_branch = e.weighted_branch_entropy();
  }
  const double holevo = s_avg - s_branch;
  // Round-off dust below zero is pinned to 0; a substantial negative would be
  // a concavity violation and is left visible.
  return (holevo < 0.0 && holevo >= -kNegativeEigTol) ? 0.0 : holevo;
}

CqEntropies cq_marginal_and_joint_entropies(const CqEnsemble& e) {
  double s_m = 0.0;
  for (const double p : e.priors()) {
    if (p >= kEigClip) s_m -= p * std::log2(p);
  }

  const double s_c = von_neumann_entropy(average_state(e));

  // Joint spectrum: the block-diagonal joint state has eigenvalues
  // {p_i * mu_ik} over branch spectra {mu_ik}; pure branches contribute {1}.
  std::vector<double> joint;
  joint.reserve(e.branch_count() * e.branch_dim());
  for (std::size_t i = 0; i < e.branch_count(); ++i) {
    const double p = e.priors()[i];
    if (e.mode() == CqEnsemble::Mode::kPure) {
      joint.push_back(p);
    } else {
      const HermitianEigen eig = hermitian_eigen(e.mixed_branches()[i].matrix());
      for (const double mu : eig.eigenvalues) {
        if (mu < -kNegativeEigTol) {
          throw std::invalid_argument("cq_marginal_and_joint_entropies: branch not PSD");
        }
        joint.push_back(p * std::max(mu, 0.0));
      }
    }
  }
  const double s_mc = spectrum_entropy_bits(joint);

  return CqEntropies{s_m, s_c, s_mc};
}

CqEnsemble apply_common_unitary(const CqEnsemble& e, const ComplexMatrix& u) {
  if (u.dim() != e.branch_dim()) {
    throw std::invalid_argument("apply_common_unitary: dimension mismatch");
  }
  if (u.unitarity_defect() > kUnitaryTol) {
    throw std::invalid_argument("apply_common_unitary: matrix is not unitary within 1e-9");
  }

  if (e.mode() == CqEnsemble::Mode::kPure) {
    std::vector<StateVector> branches;
    branches.reserve(e.branch_count());
    for (const StateVector& psi : e.pure_branches()) {
      branches.emplace_back(apply(u, psi.amplitudes()));
    }
    return CqEnsemble(e.priors(), std::move(branches));
  }

  const ComplexMatrix u_dag = u.adjoint();
  std::vector<DensityMatrix> branches;
  branches.reserve(e.branch_count());
  for (const DensityMatrix& rho : e.mixed_branches()) {
    branches.emplace_back(u * rho.matrix() * u_dag);
  }
  return CqEnsemble(e.priors(), std::move(branches), e.branch_entropies());
}

}  // namespace qcap
