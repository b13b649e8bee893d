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

#include "qcap/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "qcap/tolerances.hpp"

namespace qcap {

double fannes_bound(double d_b, std::size_t dim) {
  if (!(d_b >= 0.0 && d_b <= 1.0)) {
    throw std::invalid_argument("fannes_bound: d_b must be in [0,1]");
  }
  if (dim < 2) throw std::invalid_argument("fannes_bound: dim must be >= 2");
  if (d_b == 0.0) return 0.0;  // continuity: x log x -> 0
  return d_b * std::log2(static_cast<double>(dim)) - d_b * std::log2(d_b);
}

double step_bound(std::size_t n_database) {
  if (n_database < 2) throw std::invalid_argument("step_bound: N must be >= 2");
  const double n = static_cast<double>(n_database);
  return 3.0 / std::sqrt(n) * std::log2(n);
}

double min_queries(std::size_t n_database) {
  if (n_database < 2) throw std::invalid_argument("min_queries: N must be >= 2");
  return std::sqrt(static_cast<double>(n_database)) / 3.0;
}

bool no_speedup_threshold(double initial_entropy_bits, std::size_t n_database) {
  if (initial_entropy_bits < 0.0) {
    throw std::invalid_argument("no_speedup_threshold: entropy must be nonnegative");
  }
  if (n_database < 2) throw std::invalid_argument("no_speedup_threshold: N must be >= 2");
  const double threshold = 0.5 * std::log2(static_cast<double>(n_database));
  return initial_entropy_bits >= threshold - 1e-12;
}

StepVerdict verify_step(const DensityMatrix& before, const DensityMatrix& after) {
  if (before.dim() != after.dim()) {
    throw std::invalid_argument("verify_step: dimension mismatch");
  }
  StepVerdict v{};
  v.delta_s = std::abs(von_neumann_entropy(after) - von_neumann_entropy(before));
  v.d_b = bures_distance(before, after);
  v.fannes = fannes_bound(v.d_b, before.dim());
  v.ok = v.delta_s <= v.fannes + kBoundSlack;
  return v;
}

BoundReport bound_report(int n_qubits, double purity) {
  if (n_qubits < 1 || n_qubits > 12) {
    throw std::invalid_argument("bound_report: n_qubits must be in [1,12]");
  }
  if (!(purity >= 0.0 && purity <= 1.0)) {
    throw std::invalid_argument("bound_report: purity must be in [0,1]");
  }
  if (purity < 1.0 && n_qubits > 10) {
    throw std::invalid_argument("bound_report: mixed-mode registers support up to 10 qubits");
  }

  BoundReport r;
  r.n_qubits = n_qubits;
  r.n_database = std::size_t{1} << n_qubits;
  r.step_bound_bits = step_bound(r.n_database);
  r.min_queries = min_queries(r.n_database);
  r.threshold_entropy = 0.5 * std::log2(static_cast<double>(r.n_database));
  r.initial_entropy =
      (purity == 1.0) ? 0.0 : von_neumann_entropy(initial_register_state(n_qubits, purity));
  r.no_speedup_sufficient = no_speedup_threshold(r.initial_entropy, r.n_database);
  return r;
}

}  // namespace qcap
