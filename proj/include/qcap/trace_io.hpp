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

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcap/grover.hpp"

namespace qcap {

/// The fully resolved run configuration, embedded in every output artifact.
/// Re-running with an identical manifest reproduces bit-identical numbers.
struct RunManifest {
  std::string command;
  int n_qubits = 0;
  std::vector<double> purities;
  int n_blocks = 0;
  double bound_slack = 1e-9;
  std::string version;
  std::string sampling = "after-each-block";
};

nlohmann::ordered_json manifest_json(const RunManifest& m);

/// Shortest printf-%.12g form, locale independent.
std::string format_double(double value);

/// Fixed CSV schema:
///   k,I_bits,S_avg_bits,S_branch_bits,delta_S_oracle_bits,fidelity_oracle,
///   bures_oracle,fannes_bound_bits,step_bound_bits,fannes_ok,step_ok,
///   fidelity_bound_ok
/// preceded by a single `# manifest: {...}` comment line. Booleans are 0/1,
/// rows are '\n'-terminated.
extern const char kTraceCsvHeader[];

void write_trace_csv(std::ostream& out, const RunManifest& manifest,
                     std::span<const TraceRecord> records);

/// Long-format sweep CSV: `purity,k,I_bits` rows for each purity in order.
void write_sweep_combined_csv(std::ostream& out, const RunManifest& manifest,
                              std::span<const double> purities,
                              std::span<const std::vector<TraceRecord>> traces);

/// JSON mirror of the CSV with the manifest embedded.
nlohmann::ordered_json trace_json(const RunManifest& manifest,
                                  std::span<const TraceRecord> records);

/// Writes content to path via a temporary file plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace qcap
