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

#include <vector>

#include "qcap/state.hpp"

namespace qcap {

/// Classical-quantum joint state of the memory and computational registers:
/// priors {p_i} over the memory basis with one computational-register state
/// per branch. The joint state is block diagonal in the memory basis, so it
/// is never materialized; branches and priors describe it exactly.
///
/// The branch mode (pure StateVector vs mixed DensityMatrix) is fixed at
/// construction. Ensembles are immutable; evolution returns new ensembles.
class CqEnsemble {
 public:
  enum class Mode { kPure, kMixed };

  /// Pure-mode ensemble. Branch entropies are exactly 0.
  CqEnsemble(std::vector<double> priors, std::vector<StateVector> branches);

  /// Mixed-mode ensemble; per-branch entropies are computed here.
  CqEnsemble(std::vector<double> priors, std::vector<DensityMatrix> branches);

  /// Mixed-mode ensemble with entropies carried forward from a previous
  /// evolution step. Valid only when the branches are unitary images of
  /// branches with those entropies; holevo_mutual_information with
  /// EntropyAudit::kRecompute checks this.
  CqEnsemble(std::vector<double> priors, std::vector<DensityMatrix> branches,
             std::vector<double> branch_entropies);

  Mode mode() const noexcept { return mode_; }
  std::size_t branch_count() const noexcept { return priors_.size(); }
  std::size_t branch_dim() const noexcept;

  const std::vector<double>& priors() const noexcept { return priors_; }
  const std::vector<StateVector>& pure_branches() const;
  const std::vector<DensityMatrix>& mixed_branches() const;

  /// Per-branch von Neumann entropies in bits, cached at construction.
  const std::vector<double>& branch_entropies() const noexcept { return branch_entropies_; }

  /// sum_i p_i S(branch_i).
  double weighted_branch_entropy() const noexcept;

 private:
  void validate() const;

  Mode mode_;
  std::vector<double> priors_;
  std::vector<StateVector> pure_;
  std::vector<DensityMatrix> mixed_;
  std::vector<double> branch_entropies_;
};

/// N = 2^n branches with priors 1/N, each branch the initial register state
/// for purity p. p = 1 builds pure mode (|00...0> per branch); supported
/// sizes are n_qubits in [1,12] pure and [1,10] mixed.
CqEnsemble uniform_ensemble(int n_qubits, double p);

/// rho_C = sum_i p_i rho_C(i), summed in ascending branch order.
DensityMatrix average_state(const CqEnsemble& e);

enum class EntropyAudit { kCached, kRecompute };

/// Holevo form of the register mutual information:
/// S(rho_C) - sum_i p_i S(rho_C(i)), in bits. kRecompute ignores the cached
/// branch entropies and recomputes them from the branch spectra.
double holevo_mutual_information(const CqEnsemble& e,
                                 EntropyAudit audit = EntropyAudit::kCached);

struct CqEntropies {
  double s_m;   // S(rho_M) = -sum p_i log2 p_i
  double s_c;   // S(rho_C)
  double s_mc;  // S(rho_MC), from the exact block-diagonal spectrum {p_i mu_ik}
};

/// The three entropies of the first line of the mutual-information identity.
/// s_mc is evaluated from the explicit joint spectrum rather than from the
/// cached branch entropies, so s_m + s_c - s_mc is an independent route to
/// holevo_mutual_information (they agree within 1e-9).
CqEntropies cq_marginal_and_joint_entropies(const CqEnsemble& e);

/// Maps every branch through the same unitary (priors and branch entropies
/// unchanged). Throws std::invalid_argument if u is not unitary within 1e-9.
CqEnsemble apply_common_unitary(const CqEnsemble& e, const ComplexMatrix& u);

}  // namespace qcap
