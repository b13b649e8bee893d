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

#include "qcap/verify_suite.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <json.hpp>

#include "qcap/bounds.hpp"
#include "qcap/grover.hpp"
#include "qcap/tolerances.hpp"

namespace qcap {
namespace {

constexpr double kSweepPurities[] = {1.0, 0.95, 0.7};

// Portable uniform doubles on top of mt19937_64 so that seeded cases replay
// bit-identically across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  double normal() {
    // Box-Muller; the spare is discarded to keep the stream simple.
    double u1 = uniform();
    while (u1 == 0.0) u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  std::size_t index(std::size_t bound) { return static_cast<std::size_t>(gen_() % bound); }

 private:
  std::mt19937_64 gen_;
};

std::vector<double> random_priors(Rng& rng, std::size_t count) {
  std::vector<double> p(count);
  double sum = 0.0;
  for (double& x : p) {
    x = 0.05 + rng.uniform();
    sum += x;
  }
  for (double& x : p) x /= sum;
  // Compensate the last entry so the sum is 1 to full precision.
  double partial = 0.0;
  for (std::size_t i = 0; i + 1 < count; ++i) partial += p[i];
  p[count - 1] = 1.0 - partial;
  return p;
}

StateVector random_pure_state(Rng& rng, std::size_t dim) {
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

DensityMatrix random_density(Rng& rng, std::size_t dim) {
  ComplexMatrix g(dim);
  for (Complex& z : g.entries()) z = Complex(rng.normal(), rng.normal());
  ComplexMatrix rho = g * g.adjoint();
  const double tr = rho.trace().real();
  rho *= Complex(1.0 / tr, 0.0);
  // Exactly re-hermitize the product to keep the constructor check trivial.
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

CqEnsemble random_mixed_ensemble(Rng& rng, std::size_t branches, std::size_t dim) {
  std::vector<DensityMatrix> states;
  states.reserve(branches);
  for (std::size_t i = 0; i < branches; ++i) states.push_back(random_density(rng, dim));
  return CqEnsemble(random_priors(rng, branches), std::move(states));
}

// Random unitary composed from the circuit's own gate set (Hadamard layers,
// zero phase flip, oracle flips), materialized column by column.
ComplexMatrix random_circuit_unitary(Rng& rng, std::size_t dim, int length) {
  ComplexMatrix u(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector psi = StateVector::basis_state(dim, col);
    Rng column_rng = rng;  // same gate sequence for every column
    for (int step = 0; step < length; ++step) {
      switch (column_rng.index(3)) {
        case 0: psi = hadamard_layer(psi); break;
        case 1: psi = zero_phase_flip(psi); break;
        default: psi = oracle_apply(column_rng.index(dim), psi); break;
      }
    }
    for (std::size_t r = 0; r < dim; ++r) u(r, col) = psi[r];
  }
  // Advance the shared stream past the sequence that every column replayed.
  for (int step = 0; step < length; ++step) {
    if (rng.index(3) == 2) rng.index(dim);
  }
  return u;
}

std::string detail_json(std::initializer_list<std::pair<const char*, nlohmann::json>> fields) {
  nlohmann::ordered_json j;
  for (const auto& [k, v] : fields) j[k] = v;
  return j.dump();
}

// Applies a random gate sequence directly to a density matrix.
DensityMatrix random_circuit_image(Rng& rng, const DensityMatrix& rho, int length) {
  DensityMatrix out = rho;
  for (int step = 0; step < length; ++step) {
    switch (rng.index(3)) {
      case 0: out = hadamard_layer(out); break;
      case 1: out = zero_phase_flip(out); break;
      default: out = oracle_apply(rng.index(out.dim()), out); break;
    }
  }
  return out;
}

PropertyResult check_two_form_identity(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "eq3-two-form-identity";
  Rng rng(opt.seed ^ 0x7a3f00d1u);
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + rng.index(15);       // 2..16
    const std::size_t branches = 2 + rng.index(7);   // 2..8
    const CqEnsemble e = random_mixed_ensemble(rng, branches, dim);
    const CqEntropies ent = cq_marginal_and_joint_entropies(e);
    const double via_identity = ent.s_m + ent.s_c - ent.s_mc;
    const double via_holevo = holevo_mutual_information(e);
    ++res.cases;
    if (std::abs(via_identity - via_holevo) > opt.tolerance) {
      res.passed = false;
      res.failure_detail = detail_json({{"property", res.name},
                                        {"seed", opt.seed},
                                        {"case", i},
                                        {"dim", dim},
                                        {"branches", branches},
                                        {"identity_form", via_identity},
                                        {"holevo_form", via_holevo}});
      return res;
    }
  }
  return res;
}

PropertyResult check_entropy_unitary_invariance(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "entropy-unitary-invariance";
  Rng rng(opt.seed ^ 0x15c0ffeeu);
  for (int i = 0; i < 25; ++i) {
    const std::size_t dim = std::size_t{1} << (1 + rng.index(4));  // 2,4,8,16
    const DensityMatrix rho = random_density(rng, dim);
    const double before = von_neumann_entropy(rho);
    const DensityMatrix image = random_circuit_image(rng, rho, 16);
    const double after = von_neumann_entropy(image);
    ++res.cases;
    if (std::abs(after - before) > opt.tolerance) {
      res.passed = false;
      res.failure_detail = detail_json({{"property", res.name},
                                        {"seed", opt.seed},
                                        {"case", i},
                                        {"dim", dim},
                                        {"entropy_before", before},
                                        {"entropy_after", after}});
      return res;
    }
  }
  return res;
}

PropertyResult check_fidelity_symmetry(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "fidelity-symmetry";
  Rng rng(opt.seed ^ 0x0badf1d0u);
  for (int i = 0; i < 30; ++i) {
    const std::size_t dim = 2 + rng.index(15);
    const bool left_pure = rng.index(4) == 0;
    const DensityMatrix a =
        left_pure ? pure_density(random_pure_state(rng, dim)) : random_density(rng, dim);
    const DensityMatrix b = random_density(rng, dim);
    const double f_ab = fidelity(a, b);
    const double f_ba = fidelity(b, a);
    ++res.cases;
    if (std::abs(f_ab - f_ba) > opt.tolerance) {
      res.passed = false;
      res.failure_detail = detail_json({{"property", res.name},
                                        {"seed", opt.seed},
                                        {"case", i},
                                        {"dim", dim},
                                        {"f_ab", f_ab},
                                        {"f_ba", f_ba}});
      return res;
    }
  }
  return res;
}

PropertyResult check_common_unitary_invariance(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "common-unitary-invariance";
  Rng rng(opt.seed ^ 0x5eedc0deu);
  for (int i = 0; i < 20; ++i) {
    const std::size_t dim = std::size_t{1} << (1 + rng.index(4));
    const std::size_t branches = 2 + rng.index(5);
    const CqEnsemble e = random_mixed_ensemble(rng, branches, dim);
    const ComplexMatrix u = random_circuit_unitary(rng, dim, 12);
    const double before = holevo_mutual_information(e);
    const double after = holevo_mutual_information(apply_common_unitary(e, u));
    ++res.cases;
    if (std::abs(after - before) > opt.tolerance) {
      res.passed = false;
      res.failure_detail = detail_json({{"property", res.name},
                                        {"seed", opt.seed},
                                        {"case", i},
                                        {"dim", dim},
                                        {"branches", branches},
                                        {"holevo_before", before},
                                        {"holevo_after", after}});
      return res;
    }
  }
  return res;
}

PropertyResult check_capacity_ceiling(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "capacity-ceiling";
  Rng rng(opt.seed ^ 0x00ce11a9u);
  for (int i = 0; i < 30; ++i) {
    const std::size_t dim = 2 + rng.index(15);
    const std::size_t branches = 2 + rng.index(7);
    const CqEnsemble e = random_mixed_ensemble(rng, branches, dim);
    double min_branch_entropy = e.branch_entropies()[0];
    for (const double s : e.branch_entropies()) min_branch_entropy = std::min(min_branch_entropy, s);
    const double holevo = holevo_mutual_information(e);
    const double ceiling = std::log2(static_cast<double>(dim)) - min_branch_entropy;
    ++res.cases;
    if (holevo > ceiling + opt.tolerance) {
      res.passed = false;
      res.failure_detail = detail_json({{"property", res.name},
                                        {"seed", opt.seed},
                                        {"case", i},
                                        {"dim", dim},
                                        {"holevo", holevo},
                                        {"ceiling", ceiling}});
      return res;
    }
  }
  return res;
}

struct TraceGridResults {
  PropertyResult fannes;
  PropertyResult step;
  PropertyResult fidelity_floor;
  PropertyResult holevo_consistency;
};

TraceGridResults check_trace_grid(const VerifyOptions& opt) {
  TraceGridResults out;
  out.fannes.name = "eq8-fannes-per-step";
  out.step.name = "eq9-step-bound-per-step";
  out.fidelity_floor.name = "fidelity-oracle-lower-bound";
  out.holevo_consistency.name = "holevo-identity-per-record";
  for (int n = opt.qubits_min; n <= opt.qubits_max; ++n) {
    for (const double p : kSweepPurities) {
      GroverConfig cfg;
      cfg.n_qubits = n;
      cfg.purity = p;
      cfg.n_blocks = opt.blocks;
      const std::vector<TraceRecord> records = run_trace(cfg);
      const double fid_threshold =
          (static_cast<double>(std::size_t{1} << n) - 2.0) / static_cast<double>(std::size_t{1} << n);

      for (const TraceRecord& r : records) {
        ++out.fannes.cases;
        if (out.fannes.passed && r.delta_s_oracle > r.fannes_bound + opt.tolerance) {
          out.fannes.passed = false;
          out.fannes.failure_detail = detail_json({{"property", out.fannes.name},
                                                   {"n_qubits", n},
                                                   {"purity", p},
                                                   {"k", r.block_index},
                                                   {"delta_s", r.delta_s_oracle},
                                                   {"fannes_bound", r.fannes_bound},
                                                   {"bures", r.bures_oracle}});
        }
        ++out.step.cases;
        if (out.step.passed && r.delta_s_oracle > r.step_bound + opt.tolerance) {
          out.step.passed = false;
          out.step.failure_detail = detail_json({{"property", out.step.name},
                                                 {"n_qubits", n},
                                                 {"purity", p},
                                                 {"k", r.block_index},
                                                 {"delta_s", r.delta_s_oracle},
                                                 {"step_bound", r.step_bound}});
        }
        if (p == 1.0) {
          ++out.fidelity_floor.cases;
          if (out.fidelity_floor.passed && r.fidelity_oracle < fid_threshold - opt.tolerance) {
            out.fidelity_floor.passed = false;
            out.fidelity_floor.failure_detail =
                detail_json({{"property", out.fidelity_floor.name},
                             {"n_qubits", n},
                             {"purity", p},
                             {"k", r.block_index},
                             {"fidelity", r.fidelity_oracle},
                             {"threshold", fid_threshold}});
          }
        }
        ++out.holevo_consistency.cases;
        if (out.holevo_consistency.passed &&
            std::abs(r.mutual_information - (r.s_average - r.s_branch)) > opt.tolerance) {
          out.holevo_consistency.passed = false;
          out.holevo_consistency.failure_detail =
              detail_json({{"property", out.holevo_consistency.name},
                           {"n_qubits", n},
                           {"purity", p},
                           {"k", r.block_index},
                           {"mutual_information", r.mutual_information},
                           {"s_average", r.s_average},
                           {"s_branch", r.s_branch}});
        }
      }
    }
  }
  return out;
}

PropertyResult check_trace_norm_preservation(const VerifyOptions& opt) {
  PropertyResult res;
  res.name = "trace-norm-preservation";
  for (int n = opt.qubits_min; n <= opt.qubits_max; ++n) {
    for (const double p : kSweepPurities) {
      CqEnsemble e = uniform_ensemble(n, p);
      for (int k = 1; k <= 8; ++k) {
        e = grover_block(e);
        for (std::size_t i = 0; i < e.branch_count(); ++i) {
          const double unit = (e.mode() == CqEnsemble::Mode::kPure)
                                  ? e.pure_branches()[i].norm_squared()
                                  : e.mixed_branches()[i].matrix().trace().real();
          ++res.cases;
          if (std::abs(unit - 1.0) > opt.tolerance) {
            res.passed = false;
            res.failure_detail = detail_json({{"property", res.name},
                                              {"n_qubits", n},
                                              {"purity", p},
                                              {"k", k},
                                              {"branch", i},
                                              {"trace_or_norm", unit}});
            return res;
          }
        }
      }
    }
  }
  return res;
}

}  // namespace

std::vector<PropertyResult> run_verify_suite(const VerifyOptions& opt) {
  if (opt.qubits_min < 1 || opt.qubits_max > 10 || opt.qubits_min > opt.qubits_max) {
    throw std::invalid_argument("verify: qubit range must satisfy 1 <= min <= max <= 10");
  }
  if (!(opt.tolerance > 0.0)) {
    throw std::invalid_argument("verify: tolerance must be positive");
  }
  if (opt.blocks < 1 || opt.blocks > kMaxBlocks) {
    throw std::invalid_argument("verify: blocks must be in [1, 10000]");
  }

  std::vector<PropertyResult> results;
  results.push_back(check_two_form_identity(opt));
  results.push_back(check_entropy_unitary_invariance(opt));
  results.push_back(check_fidelity_symmetry(opt));
  results.push_back(check_common_unitary_invariance(opt));
  results.push_back(check_capacity_ceiling(opt));
  TraceGridResults grid = check_trace_grid(opt);
  results.push_back(std::move(grid.fannes));
  results.push_back(std::move(grid.step));
  results.push_back(std::move(grid.fidelity_floor));
  results.push_back(std::move(grid.holevo_consistency));
  results.push_back(check_trace_norm_preservation(opt));
  return results;
}

}  // namespace qcap
