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

// Acceptance suite: one pass/fail line per criterion, exit code equals the
// number of failed criteria. Tolerances are pinned in code next to each
// check.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qcap/bounds.hpp"
#include "qcap/ensemble.hpp"
#include "qcap/grover.hpp"
#include "qcap/verify_suite.hpp"
#include "support.hpp"

using namespace qcap;

namespace {

struct Criterion {
  std::string name;
  bool pass = true;
  std::string detail;
};

std::vector<Criterion> g_results;

void report(const std::string& name, bool pass, const std::string& detail) {
  g_results.push_back({name, pass, detail});
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

using TraceGrid = std::map<std::pair<int, double>, std::vector<TraceRecord>>;

TraceGrid run_grid(int blocks) {
  TraceGrid grid;
  for (int n = 2; n <= 6; ++n) {
    for (const double p : {1.0, 0.95, 0.7}) {
      grid[{n, p}] = run_trace(test::trace_cfg(n, p, blocks));
    }
  }
  return grid;
}

void criterion_fig2a() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<TraceRecord> records =
      run_trace(test::trace_cfg(4, 1.0, 12));
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  bool ok = records[0].mutual_information == 0.0;
  int argmax = 1;
  for (int k = 1; k <= 6; ++k) {
    if (records[k].mutual_information > records[argmax].mutual_information) argmax = k;
  }
  ok = ok && argmax == 3;
  ok = ok && records[3].mutual_information >= 3.5;
  bool dip = false;
  for (int k = 5; k <= 8; ++k) dip = dip || records[k].mutual_information < 1.0;
  ok = ok && dip;
  ok = ok && seconds < 1.0;

  std::ostringstream d;
  d << "I(0)=" << records[0].mutual_information << ", peak at k=" << argmax
    << " with I=" << fmt(records[argmax].mutual_information) << ", I(6)="
    << fmt(records[6].mutual_information) << ", " << fmt(seconds) << "s";
  report("fig2a-reproduction", ok, d.str());
}

void criterion_mixedness_ordering(const TraceGrid& grid) {
  const double ceilings[3] = {4.0, 4.0 - 4.0 * test::binary_entropy(0.95),
                              4.0 - 4.0 * test::binary_entropy(0.7)};
  const double frozen[3] = {4.0, 2.854412, 0.474837};
  const double purities[3] = {1.0, 0.95, 0.7};

  bool ok = true;
  double max_i[3] = {0.0, 0.0, 0.0};
  for (int i = 0; i < 3; ++i) {
    ok = ok && std::abs(ceilings[i] - frozen[i]) <= 1e-6;
    for (const TraceRecord& r : grid.at({4, purities[i]})) {
      max_i[i] = std::max(max_i[i], r.mutual_information);
      ok = ok && r.mutual_information <= ceilings[i] + 1e-9;
    }
  }
  ok = ok && max_i[0] > max_i[1] && max_i[1] > max_i[2];

  std::ostringstream d;
  d << "max I = " << fmt(max_i[0]) << " > " << fmt(max_i[1]) << " > " << fmt(max_i[2])
    << " under ceilings " << fmt(ceilings[0]) << "/" << fmt(ceilings[1]) << "/"
    << fmt(ceilings[2]);
  report("fig2bc-mixedness-ordering", ok, d.str());
}

void criterion_step_bound(const TraceGrid& grid) {
  bool ok = step_bound(16) == 3.0;
  int violations = 0;
  for (const auto& [key, records] : grid) {
    for (const TraceRecord& r : records) {
      if (r.delta_s_oracle > r.step_bound + 1e-9) ++violations;
    }
  }
  ok = ok && violations == 0;
  std::ostringstream d;
  d << violations << " violating steps over n=2..6, p in {1,0.95,0.7}; step_bound(16)="
    << step_bound(16);
  report("eq9-per-query-bound", ok, d.str());
}

void criterion_fannes(const TraceGrid& grid) {
  int violations = 0;
  std::map<std::pair<int, double>, int> by_cell;
  for (const auto& [key, records] : grid) {
    for (const TraceRecord& r : records) {
      if (r.delta_s_oracle > r.fannes_bound + 1e-9) {
        ++violations;
        ++by_cell[key];
      }
    }
  }
  std::ostringstream d;
  if (violations == 0) {
    d << "0 violating steps";
  } else {
    d << violations << " violating steps:";
    for (const auto& [key, count] : by_cell) {
      d << " (n=" << key.first << ",p=" << key.second << "):" << count;
    }
    d << " -- the printed Bures-form continuity bound is not attainable at small N";
  }
  report("eq8-fannes-check", violations == 0, d.str());
}

void criterion_fidelity_floor(const TraceGrid& grid) {
  bool ok = true;
  double worst_margin = 1.0;
  for (int n = 2; n <= 6; ++n) {
    const double threshold =
        (static_cast<double>(1 << n) - 2.0) / static_cast<double>(1 << n);
    for (const TraceRecord& r : grid.at({n, 1.0})) {
      const double margin = r.fidelity_oracle - threshold;
      worst_margin = std::min(worst_margin, margin);
      ok = ok && margin >= -1e-9;
    }
  }
  std::ostringstream d;
  d << "worst F - (N-2)/N margin = " << worst_margin;
  report("fidelity-lower-bound", ok, d.str());
}

void criterion_min_queries(const TraceGrid& grid) {
  const std::vector<TraceRecord>& records = grid.at({4, 1.0});
  const double target = 4.0 - 0.01;
  const double floor = min_queries(16);

  int first = -1;
  bool ok = true;
  for (const TraceRecord& r : records) {
    if (r.mutual_information >= target) {
      first = r.block_index;
      break;
    }
  }
  for (const TraceRecord& r : records) {
    if (static_cast<double>(r.block_index) < floor) {
      ok = ok && r.mutual_information < target;
    }
  }
  if (first >= 0) ok = ok && static_cast<double>(first) >= floor;
  ok = ok && std::abs(floor - 1.333333) <= 1e-6;

  std::ostringstream d;
  d << "min_queries(16)=" << fmt(floor) << ", first k with I >= 3.99 is "
    << (first >= 0 ? std::to_string(first) : std::string("none within 25 blocks"));
  report("minimum-queries", ok, d.str());
}

void criterion_two_form_identity() {
  test::Rng rng(42);
  bool ok = true;
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t dim = 2 + rng.index(15);
    const std::size_t branches = 2 + rng.index(7);
    std::vector<double> priors(branches);
    double sum = 0.0;
    for (double& p : priors) {
      p = 0.05 + rng.uniform();
      sum += p;
    }
    for (double& p : priors) p /= sum;
    double partial = 0.0;
    for (std::size_t b = 0; b + 1 < branches; ++b) partial += priors[b];
    priors[branches - 1] = 1.0 - partial;

    std::vector<DensityMatrix> states;
    for (std::size_t b = 0; b < branches; ++b) states.push_back(test::random_density(rng, dim));
    const CqEnsemble e(std::move(priors), std::move(states));

    const CqEntropies ent = cq_marginal_and_joint_entropies(e);
    const double gap =
        std::abs(ent.s_m + ent.s_c - ent.s_mc - holevo_mutual_information(e));
    worst = std::max(worst, gap);
    ok = ok && gap <= 1e-9;
  }
  std::ostringstream d;
  d << "100 seeded ensembles (dims 2-16), worst |identity - holevo| = " << worst;
  report("eq3-two-form-identity", ok, d.str());
}

void criterion_known_value() {
  const double inv = 1.0 / std::sqrt(2.0);
  const CqEnsemble e({0.5, 0.5},
                     {StateVector::basis_state(2, 0), StateVector({Complex(inv), Complex(inv)})});
  const double holevo = holevo_mutual_information(e);
  const bool ok = std::abs(holevo - 0.600901) <= 1e-4;
  report("known-value-oracle", ok, "I{1/2|0>, 1/2|+>} = " + fmt(holevo) + " vs 0.600901 +/- 1e-4");
}

void criterion_exact_small_case() {
  const std::vector<TraceRecord> records =
      run_trace(test::trace_cfg(2, 1.0, 1));
  const double i1 = records[1].mutual_information;
  report("exact-small-case", std::abs(i1 - 2.0) <= 1e-9, "n=2 one block: I = " + fmt(i1));
}

void criterion_invariance_suite() {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<PropertyResult> results = run_verify_suite(VerifyOptions{});
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  int failed = 0;
  std::string failing;
  for (const PropertyResult& r : results) {
    if (!r.passed) {
      ++failed;
      failing += (failing.empty() ? "" : ", ") + r.name;
    }
  }
  const bool ok = failed == 0 && seconds < 60.0;
  std::ostringstream d;
  d << results.size() << " properties in " << fmt(seconds) << "s";
  if (failed > 0) d << "; failing: " << failing;
  report("invariance-suite-verify-exit-0", ok, d.str());
}

void criterion_threshold_classifier() {
  const BoundReport mixed = bound_report(4, 0.7);
  const BoundReport near = bound_report(4, 0.95);
  const BoundReport pure = bound_report(4, 1.0);
  const bool ok = mixed.no_speedup_sufficient && !near.no_speedup_sufficient &&
                  !pure.no_speedup_sufficient &&
                  std::abs(mixed.threshold_entropy - 2.0) <= 1e-12;
  std::ostringstream d;
  d << "p=0.7 -> " << (mixed.no_speedup_sufficient ? "true" : "false") << ", p=0.95 -> "
    << (near.no_speedup_sufficient ? "true" : "false") << ", p=1.0 -> "
    << (pure.no_speedup_sufficient ? "true" : "false") << ", threshold "
    << fmt(mixed.threshold_entropy) << " bits";
  report("threshold-classifier", ok, d.str());
}

}  // namespace

int main() {
  const TraceGrid grid = run_grid(25);

  criterion_fig2a();
  criterion_mixedness_ordering(grid);
  criterion_step_bound(grid);
  criterion_fannes(grid);
  criterion_fidelity_floor(grid);
  criterion_min_queries(grid);
  criterion_two_form_identity();
  criterion_known_value();
  criterion_exact_small_case();
  criterion_invariance_suite();
  criterion_threshold_classifier();

  int failed = 0;
  for (std::size_t i = 0; i < g_results.size(); ++i) {
    const Criterion& c = g_results[i];
    if (!c.pass) ++failed;
    std::printf("[%2zu] %s  %-32s %s\n", i + 1, c.pass ? "PASS" : "FAIL", c.name.c_str(),
                c.detail.c_str());
  }
  std::printf("%zu criteria, %d failed\n", g_results.size(), failed);
  return failed;
}
