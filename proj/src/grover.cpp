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

#include "qcap/grover.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

#include "qcap/bounds.hpp"
#include "qcap/tolerances.hpp"

namespace qcap {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// In-place butterfly over a strided slice: data[base + i*stride], i in [0,n).
void fwht_strided(Complex* data, std::size_t n, std::size_t stride) {
  for (std::size_t len = 1; len < n; len <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * len) {
      for (std::size_t i = block; i < block + len; ++i) {
        Complex& a = data[i * stride];
        Complex& b = data[(i + len) * stride];
        const Complex x = a, y = b;
        a = (x + y) * kInvSqrt2;
        b = (x - y) * kInvSqrt2;
      }
    }
  }
}

void check_power_of_two(std::size_t dim) {
  if (!is_power_of_two(dim)) {
    throw std::invalid_argument("hadamard_layer: dimension must be a power of two");
  }
}

}  // namespace

StateVector oracle_apply(std::size_t marked, const StateVector& state) {
  if (marked >= state.dim()) throw std::invalid_argument("oracle_apply: index out of range");
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  amps[marked] = -amps[marked];
  return StateVector(std::move(amps));
}

DensityMatrix oracle_apply(std::size_t marked, const DensityMatrix& state) {
  if (marked >= state.dim()) throw std::invalid_argument("oracle_apply: index out of range");
  ComplexMatrix m = state.matrix();
  const std::size_t n = m.dim();
  // Conjugation by diag(1,...,-1 at marked,...,1): row and column `marked`
  // change sign, the (marked, marked) entry twice (i.e. not at all).
  for (std::size_t j = 0; j < n; ++j) {
    m(marked, j) = -m(marked, j);
    m(j, marked) = -m(j, marked);
  }
  return DensityMatrix(std::move(m));
}

StateVector hadamard_layer(const StateVector& state) {
  check_power_of_two(state.dim());
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  fwht_strided(amps.data(), amps.size(), 1);
  return StateVector(std::move(amps));
}

DensityMatrix hadamard_layer(const DensityMatrix& state) {
  check_power_of_two(state.dim());
  ComplexMatrix m = state.matrix();
  const std::size_t n = m.dim();
  // H rho H: butterfly down the columns, then along the rows (H is real
  // symmetric, so no conjugation is needed on the right).
  for (std::size_t c = 0; c < n; ++c) fwht_strided(m.entries().data() + c, n, n);
  for (std::size_t r = 0; r < n; ++r) fwht_strided(m.entries().data() + r * n, n, 1);
  return DensityMatrix(std::move(m));
}

StateVector zero_phase_flip(const StateVector& state) {
  std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
  amps[0] = -amps[0];
  return StateVector(std::move(amps));
}

DensityMatrix zero_phase_flip(const DensityMatrix& state) {
  ComplexMatrix m = state.matrix();
  const std::size_t n = m.dim();
  for (std::size_t j = 0; j < n; ++j) {
    m(0, j) = -m(0, j);
    m(j, 0) = -m(j, 0);
  }
  return DensityMatrix(std::move(m));
}

namespace {

// Advances the ensemble through one block. When probes are requested, the
// average state immediately before and immediately after the oracle sub-step
// is captured.
CqEnsemble advance_block(const CqEnsemble& e, std::optional<DensityMatrix>* pre_oracle,
                         std::optional<DensityMatrix>* post_oracle) {
  if (e.branch_count() != e.branch_dim()) {
    throw std::invalid_argument(
        "grover_block: branch count must equal branch dimension (one marked item per branch)");
  }

  if (e.mode() == CqEnsemble::Mode::kPure) {
    std::vector<StateVector> branches;
    branches.reserve(e.branch_count());
    for (const StateVector& psi : e.pure_branches()) branches.push_back(hadamard_layer(psi));
    CqEnsemble stage(e.priors(), std::move(branches));
    if (pre_oracle) pre_oracle->emplace(average_state(stage));

    std::vector<StateVector> queried;
    queried.reserve(e.branch_count());
    for (std::size_t i = 0; i < stage.branch_count(); ++i) {
      queried.push_back(oracle_apply(i, stage.pure_branches()[i]));
    }
    CqEnsemble mid(e.priors(), std::move(queried));
    if (post_oracle) post_oracle->emplace(average_state(mid));

    std::vector<StateVector> out;
    out.reserve(e.branch_count());
    for (const StateVector& psi : mid.pure_branches()) {
      out.push_back(zero_phase_flip(hadamard_layer(psi)));
    }
    return CqEnsemble(e.priors(), std::move(out));
  }

  std::vector<DensityMatrix> branches;
  branches.reserve(e.branch_count());
  for (const DensityMatrix& rho : e.mixed_branches()) branches.push_back(hadamard_layer(rho));
  CqEnsemble stage(e.priors(), std::move(branches), e.branch_entropies());
  if (pre_oracle) pre_oracle->emplace(average_state(stage));

  std::vector<DensityMatrix> queried;
  queried.reserve(e.branch_count());
  for (std::size_t i = 0; i < stage.branch_count(); ++i) {
    queried.push_back(oracle_apply(i, stage.mixed_branches()[i]));
  }
  CqEnsemble mid(e.priors(), std::move(queried), e.branch_entropies());
  if (post_oracle) post_oracle->emplace(average_state(mid));

  std::vector<DensityMatrix> out;
  out.reserve(e.branch_count());
  for (const DensityMatrix& rho : mid.mixed_branches()) {
    out.push_back(zero_phase_flip(hadamard_layer(rho)));
  }
  return CqEnsemble(e.priors(), std::move(out), e.branch_entropies());
}

CqEnsemble make_initial_ensemble(const GroverConfig& cfg) {
  CqEnsemble e = uniform_ensemble(cfg.n_qubits, cfg.purity);
  if (cfg.priors.empty()) return e;
  if (cfg.priors.size() != e.branch_count()) {
    throw std::invalid_argument("run_trace: explicit priors must have 2^n entries");
  }
  if (e.mode() == CqEnsemble::Mode::kPure) {
    return CqEnsemble(cfg.priors, e.pure_branches());
  }
  return CqEnsemble(cfg.priors, e.mixed_branches(), e.branch_entropies());
}

}  // namespace

CqEnsemble grover_block(const CqEnsemble& e) { return advance_block(e, nullptr, nullptr); }

std::vector<TraceRecord> run_trace(const GroverConfig& cfg) {
  if (cfg.n_blocks < 0 || cfg.n_blocks > kMaxBlocks) {
    throw std::invalid_argument("run_trace: n_blocks must be in [0, 10000]");
  }
  CqEnsemble e = make_initial_ensemble(cfg);

  const std::size_t n_db = e.branch_count();
  const double sb = step_bound(n_db);
  const double fid_threshold = static_cast<double>(n_db - 2) / static_cast<double>(n_db);

  std::vector<TraceRecord> records;
  records.reserve(static_cast<std::size_t>(cfg.n_blocks) + 1);

  // k = 0: identical branches, so the registers are uncorrelated by
  // construction and the mutual information is identically zero.
  const double s0 = e.weighted_branch_entropy();
  TraceRecord initial;
  initial.block_index = 0;
  initial.mutual_information = 0.0;
  initial.s_average = s0;
  initial.s_branch = s0;
  initial.step_bound = sb;
  records.push_back(initial);

  for (int k = 1; k <= cfg.n_blocks; ++k) {
    std::optional<DensityMatrix> pre, post;
    e = advance_block(e, &pre, &post);

    TraceRecord rec;
    rec.block_index = k;
    rec.s_branch = e.weighted_branch_entropy();
    rec.s_average = von_neumann_entropy(average_state(e));
    rec.mutual_information = rec.s_average - rec.s_branch;

    const double s_pre = von_neumann_entropy(*pre);
    const double s_post = von_neumann_entropy(*post);
    rec.delta_s_oracle = std::abs(s_post - s_pre);
    rec.fidelity_oracle = fidelity(*pre, *post);
    rec.bures_oracle = std::sqrt(std::max(1.0 - rec.fidelity_oracle * rec.fidelity_oracle, 0.0));
    rec.fannes_bound = fannes_bound(rec.bures_oracle, e.branch_dim());
    rec.step_bound = sb;
    rec.fannes_ok = rec.delta_s_oracle <= rec.fannes_bound + kBoundSlack;
    rec.step_ok = rec.delta_s_oracle <= rec.step_bound + kBoundSlack;
    rec.fidelity_bound_ok = rec.fidelity_oracle >= fid_threshold - kBoundSlack;
    records.push_back(rec);
  }
  return records;
}

}  // namespace qcap
