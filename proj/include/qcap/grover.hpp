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

#include "qcap/ensemble.hpp"
#include "qcap/state.hpp"

namespace qcap {

/// Configuration for a capacity trace. priors empty means uniform.
struct GroverConfig {
  int n_qubits = 0;
  double purity = 1.0;
  int n_blocks = 0;
  std::vector<double> priors;
};

inline constexpr int kMaxBlocks = 10000;

/// One sampled block iteration. The oracle diagnostics (delta_s_oracle,
/// fidelity_oracle, bures_oracle, the bound values and flags) are measured
/// across the query sub-step only: average state immediately before vs
/// immediately after the oracle inside the block. Capacity fields are
/// sampled after the complete block.
struct TraceRecord {
  int block_index = 0;
  double mutual_information = 0.0;
  double s_average = 0.0;
  double s_branch = 0.0;
  double delta_s_oracle = 0.0;
  double fidelity_oracle = 1.0;
  double bures_oracle = 0.0;
  double fannes_bound = 0.0;
  double step_bound = 0.0;
  bool fannes_ok = true;
  bool step_ok = true;
  bool fidelity_bound_ok = true;
};

/// Query transformation for branch `marked`: the amplitude (pure) or the
/// off-diagonal row/column (mixed) at that basis index changes sign.
StateVector oracle_apply(std::size_t marked, const StateVector& state);
DensityMatrix oracle_apply(std::size_t marked, const DensityMatrix& state);

/// Hadamard on every qubit, as the fast Walsh-Hadamard butterfly with 1/sqrt2
/// scaling per stage (two-sided for density matrices). Requires a
/// power-of-two dimension.
StateVector hadamard_layer(const StateVector& state);
DensityMatrix hadamard_layer(const DensityMatrix& state);

/// Phase flip of the all-zeros basis state.
StateVector zero_phase_flip(const StateVector& state);
DensityMatrix zero_phase_flip(const DensityMatrix& state);

/// One block: per branch i, hadamard_layer, oracle_apply(i), hadamard_layer,
/// zero_phase_flip, in that order. Requires branch count == branch dimension
/// (each branch needs a marked item).
CqEnsemble grover_block(const CqEnsemble& e);

/// Runs n_blocks blocks and returns one record at k = 0 (initial state,
/// mutual information identically 0) plus one after each block.
std::vector<TraceRecord> run_trace(const GroverConfig& cfg);

}  // namespace qcap
