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

#include "qcap/trace_io.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <system_error>

namespace qcap {

const char kTraceCsvHeader[] =
    "k,I_bits,S_avg_bits,S_branch_bits,delta_S_oracle_bits,fidelity_oracle,bures_oracle,"
    "fannes_bound_bits,step_bound_bits,fannes_ok,step_ok,fidelity_bound_ok";

std::string format_double(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

nlohmann::ordered_json manifest_json(const RunManifest& m) {
  nlohmann::ordered_json j;
  j["command"] = m.command;
  j["n_qubits"] = m.n_qubits;
  j["purities"] = m.purities;
  j["n_blocks"] = m.n_blocks;
  j["bound_slack"] = m.bound_slack;
  j["version"] = m.version;
  j["sampling"] = m.sampling;
  return j;
}

namespace {

void write_record_row(std::ostream& out, const TraceRecord& r) {
  out << r.block_index << ',' << format_double(r.mutual_information) << ','
      << format_double(r.s_average) << ',' << format_double(r.s_branch) << ','
      << format_double(r.delta_s_oracle) << ',' << format_double(r.fidelity_oracle) << ','
      << format_double(r.bures_oracle) << ',' << format_double(r.fannes_bound) << ','
      << format_double(r.step_bound) << ',' << (r.fannes_ok ? '1' : '0') << ','
      << (r.step_ok ? '1' : '0') << ',' << (r.fidelity_bound_ok ? '1' : '0') << '\n';
}

}  // namespace

void write_trace_csv(std::ostream& out, const RunManifest& manifest,
                     std::span<const TraceRecord> records) {
  out << "# manifest: " << manifest_json(manifest).dump() << '\n';
  out << kTraceCsvHeader << '\n';
  for (const TraceRecord& r : records) write_record_row(out, r);
}

void write_sweep_combined_csv(std::ostream& out, const RunManifest& manifest,
                              std::span<const double> purities,
                              std::span<const std::vector<TraceRecord>> traces) {
  out << "# manifest: " << manifest_json(manifest).dump() << '\n';
  out << "purity,k,I_bits\n";
  for (std::size_t i = 0; i < purities.size(); ++i) {
    for (const TraceRecord& r : traces[i]) {
      out << format_double(purities[i]) << ',' << r.block_index << ','
          << format_double(r.mutual_information) << '\n';
    }
  }
}

nlohmann::ordered_json trace_json(const RunManifest& manifest,
                                  std::span<const TraceRecord> records) {
  nlohmann::ordered_json j;
  j["manifest"] = manifest_json(manifest);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const TraceRecord& r : records) {
    nlohmann::ordered_json row;
    row["k"] = r.block_index;
    row["I_bits"] = r.mutual_information;
    row["S_avg_bits"] = r.s_average;
    row["S_branch_bits"] = r.s_branch;
    row["delta_S_oracle_bits"] = r.delta_s_oracle;
    row["fidelity_oracle"] = r.fidelity_oracle;
    row["bures_oracle"] = r.bures_oracle;
    row["fannes_bound_bits"] = r.fannes_bound;
    row["step_bound_bits"] = r.step_bound;
    row["fannes_ok"] = r.fannes_ok;
    row["step_ok"] = r.step_ok;
    row["fidelity_bound_ok"] = r.fidelity_bound_ok;
    rows.push_back(std::move(row));
  }
  j["records"] = std::move(rows);
  return j;
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp + " for writing");
    f << content;
    if (!f.good()) throw std::runtime_error("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw std::runtime_error("rename " + tmp + " -> " + path + " failed: " + ec.message());
}

}  // namespace qcap
