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

#include <cstddef>

#include "qcap/state.hpp"

namespace qcap {

/// Entropy-continuity bound in Bures distance, as a standalone formula:
/// d_b log2(dim) - d_b log2(d_b), with 0 log 0 = 0. Throws
/// std::invalid_argument for d_b outside [0,1] or dim < 2.
///
/// Note: this form is not a valid bound for every state pair at small
/// dimension; see verify_step callers for where it is actually checked.
double fannes_bound(double d_b, std::size_t dim);

/// Per-query capacity bound (3/sqrt(N)) log2(N), in bits.
double step_bound(std::size_t n_database);

/// log2(N) / step_bound(N) = sqrt(N)/3: the query count below which the
/// mutual information cannot reach log2(N). Returned unrounded.
double min_queries(std::size_t n_database);

/// True iff initial_entropy_bits >= (1/2) log2(N) - 1e-12: the sufficient
/// (not necessary) condition for no quantum speedup in the search.
bool no_speedup_threshold(double initial_entropy_bits, std::size_t n_database);

struct StepVerdict {
  double delta_s;  // |S(after) - S(before)| in bits
  double d_b;      // Bures distance between the states
  double fannes;   // fannes_bound(d_b, dim)
  bool ok;         // delta_s <= fannes + 1e-9
};

/// Measures one evolution step against the continuity bound.
StepVerdict verify_step(const DensityMatrix& before, const DensityMatrix& after);

/// The per-size bound numbers for a register preparation.
struct BoundReport {
  int n_qubits = 0;
  std::size_t n_database = 0;       // N = 2^n_qubits
  double step_bound_bits = 0.0;     // (3/sqrt(N)) log2 N
  double min_queries = 0.0;         // sqrt(N)/3
  double threshold_entropy = 0.0;   // (1/2) log2 N
  double initial_entropy = 0.0;     // S of the prepared register, bits
  bool no_speedup_sufficient = false;
};

/// Builds the report for an n-qubit register prepared at purity p.
BoundReport bound_report(int n_qubits, double purity);

}  // namespace qcap
