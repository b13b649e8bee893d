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

#include <cstdint>
#include <string>
#include <vector>

namespace qcap {

struct VerifyOptions {
  int qubits_min = 2;
  int qubits_max = 6;
  double tolerance = 1e-9;
  std::uint64_t seed = 42;
  int blocks = 25;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  int cases = 0;
  /// JSON description of the first violating instance, empty when passed.
  std::string failure_detail;
};

/// Runs the full property table: the two-form mutual-information identity,
/// entropy/fidelity invariances, the per-step entropy bounds, the oracle
/// fidelity floor, the capacity ceiling, and trace/norm preservation.
/// Randomized cases are generated from the seed with a portable generator,
/// so failures replay exactly.
std::vector<PropertyResult> run_verify_suite(const VerifyOptions& options);

}  // namespace qcap
