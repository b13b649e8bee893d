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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcap/bounds.hpp"
#include "qcap/grover.hpp"
#include "support.hpp"

using namespace qcap;

namespace {

DensityMatrix maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / static_cast<double>(dim);
  return DensityMatrix(std::move(m));
}

}  // namespace

TEST_CASE("fannes bound values") {
  CHECK(fannes_bound(0.0, 16) == 0.0);
  CHECK(fannes_bound(0.5, 16) == doctest::Approx(2.5).epsilon(1e-15));
  // Direct substitution at d_b = 0.484123: 0.484123*4 - 0.484123*log2(0.484123).
  CHECK(std::abs(fannes_bound(0.484123, 16) - 2.443153084) <= 1e-8);
  CHECK(fannes_bound(1.0, 16) == doctest::Approx(4.0).epsilon(1e-15));
}

TEST_CASE("fannes bound domain errors") {
  CHECK_THROWS_AS(fannes_bound(-0.1, 16), std::invalid_argument);
  CHECK_THROWS_AS(fannes_bound(1.1, 16), std::invalid_argument);
  CHECK_THROWS_AS(fannes_bound(0.5, 1), std::invalid_argument);
}

TEST_CASE("fannes bound is nonnegative and nondecreasing in dimension") {
  for (double d_b = 0.0; d_b <= 1.0; d_b += 0.05) {
    double previous = 0.0;
    for (std::size_t dim = 2; dim <= 64; dim *= 2) {
      const double value = fannes_bound(d_b, dim);
      CHECK(value >= 0.0);
      CHECK(value >= previous - 1e-12);
      previous = value;
    }
  }
}

TEST_CASE("step bound values") {
  CHECK(step_bound(16) == 3.0);  // (3/4) * 4, exact in binary
  CHECK(std::abs(step_bound(4) - 3.0) <= 1e-12);
  CHECK(std::abs(step_bound(256) - 1.5) <= 1e-12);
  CHECK_THROWS_AS(step_bound(1), std::invalid_argument);
}

TEST_CASE("minimum query counts") {
  CHECK(std::abs(min_queries(16) - 4.0 / 3.0) <= 1e-12);
  CHECK(std::abs(min_queries(16) - 1.333333) <= 1e-6);
  CHECK(std::abs(min_queries(4) - 0.666667) <= 1e-6);
  CHECK(min_queries(9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(min_queries(0), std::invalid_argument);
}

TEST_CASE("no-speedup threshold classification") {
  CHECK_FALSE(no_speedup_threshold(0.0, 16));
  CHECK(no_speedup_threshold(4.0 * test::binary_entropy(0.7), 16));
  CHECK_FALSE(no_speedup_threshold(4.0 * test::binary_entropy(0.95), 16));
  CHECK(no_speedup_threshold(2.0, 16));  // boundary counts as satisfied
  CHECK_THROWS_AS(no_speedup_threshold(-0.5, 16), std::invalid_argument);
}

TEST_CASE("verify_step on identical states") {
  const DensityMatrix rho = maximally_mixed(4);
  const StepVerdict v = verify_step(rho, rho);
  CHECK(v.delta_s <= 1e-12);
  CHECK(v.d_b <= 1e-7);
  CHECK(v.fannes >= 0.0);
  CHECK(v.ok);
}

TEST_CASE("verify_step on orthogonal pure states") {
  const DensityMatrix zero = pure_density(StateVector::basis_state(2, 0));
  const DensityMatrix one = pure_density(StateVector::basis_state(2, 1));
  const StepVerdict v = verify_step(zero, one);
  CHECK(v.delta_s <= 1e-10);
  CHECK(v.d_b == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(v.fannes == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(v.ok);
}

TEST_CASE("verify_step from a pure state to maximally mixed") {
  const DensityMatrix zero = pure_density(StateVector::basis_state(2, 0));
  const StepVerdict v = verify_step(zero, maximally_mixed(2));
  CHECK(std::abs(v.delta_s - 1.0) <= 1e-10);
  CHECK(std::abs(v.d_b - 0.707107) <= 1e-6);
  CHECK(std::abs(v.fannes - 1.060660) <= 1e-6);
  CHECK(v.ok);
}

TEST_CASE("verify_step rejects mismatched dimensions") {
  CHECK_THROWS_AS(
      verify_step(maximally_mixed(2), maximally_mixed(4)), std::invalid_argument);
}

TEST_CASE("bound report for the 16-entry database") {
  const BoundReport pure = bound_report(4, 1.0);
  CHECK(pure.n_database == 16);
  CHECK(pure.step_bound_bits == 3.0);
  CHECK(std::abs(pure.min_queries - 1.333333) <= 1e-6);
  CHECK(pure.threshold_entropy == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(pure.initial_entropy == 0.0);
  CHECK_FALSE(pure.no_speedup_sufficient);

  const BoundReport mixed = bound_report(4, 0.7);
  CHECK(std::abs(mixed.initial_entropy - 3.525163) <= 1e-6);
  CHECK(mixed.no_speedup_sufficient);

  const BoundReport near = bound_report(4, 0.95);
  CHECK(std::abs(near.initial_entropy - 1.145588) <= 1e-6);
  CHECK_FALSE(near.no_speedup_sufficient);

  CHECK_THROWS_AS(bound_report(0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(bound_report(11, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(bound_report(4, 1.5), std::invalid_argument);
}

TEST_CASE("capacity saturation never happens before the query floor") {
  for (int n = 2; n <= 6; ++n) {
    const std::size_t n_db = std::size_t{1} << n;
    const double target = std::log2(static_cast<double>(n_db)) - 0.01;
    const std::vector<TraceRecord> records =
        run_trace(test::trace_cfg(n, 1.0, 25));

    const double floor = min_queries(n_db);
    int first = -1;
    for (const TraceRecord& r : records) {
      if (r.mutual_information >= target) {
        first = r.block_index;
        break;
      }
    }
    // No block below the floor may reach the target...
    for (const TraceRecord& r : records) {
      if (static_cast<double>(r.block_index) < floor) {
        CHECK(r.mutual_information < target);
      }
    }
    // ...and when saturation happens inside the horizon it happens late enough.
    if (first >= 0) CHECK(static_cast<double>(first) >= floor);
    if (n == 4) CHECK(first == 15);
  }
}
