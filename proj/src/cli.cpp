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

#include "qcap/cli.hpp"

#include <filesystem>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "qcap/bounds.hpp"
#include "qcap/grover.hpp"
#include "qcap/hermitian_eigen.hpp"
#include "qcap/tolerances.hpp"
#include "qcap/trace_io.hpp"
#include "qcap/verify_suite.hpp"
#include "qcap/version.hpp"

namespace qcap::cli {
namespace {

struct TraceArgs {
  int qubits = 0;
  double purity = 1.0;
  int blocks = 25;
  std::string out_path;  // empty: stdout
  std::string format = "csv";
};

struct SweepArgs {
  int qubits = 0;
  std::vector<double> purities;
  int blocks = 25;
  std::string out_dir;
  std::string format = "csv";
};

struct ThresholdArgs {
  int qubits = 0;
  double purity = 1.0;
  std::string format = "text";
};

RunManifest make_manifest(std::string command, int qubits, std::vector<double> purities,
                          int blocks) {
  RunManifest m;
  m.command = std::move(command);
  m.n_qubits = qubits;
  m.purities = std::move(purities);
  m.n_blocks = blocks;
  m.bound_slack = kBoundSlack;
  m.version = std::string(kVersion);
  return m;
}

std::string render_trace(const RunManifest& manifest, std::span<const TraceRecord> records,
                         const std::string& format) {
  if (format == "json") {
    return trace_json(manifest, records).dump(2) + "\n";
  }
  std::ostringstream buf;
  write_trace_csv(buf, manifest, records);
  return buf.str();
}

int cmd_trace(const TraceArgs& args, std::ostream& out) {
  GroverConfig cfg;
  cfg.n_qubits = args.qubits;
  cfg.purity = args.purity;
  cfg.n_blocks = args.blocks;
  const std::vector<TraceRecord> records = run_trace(cfg);

  const RunManifest manifest = make_manifest("trace", args.qubits, {args.purity}, args.blocks);
  const std::string payload = render_trace(manifest, records, args.format);
  if (args.out_path.empty()) {
    out << payload;
  } else {
    write_file_atomic(args.out_path, payload);
  }
  return 0;
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  if (args.purities.empty()) throw std::invalid_argument("sweep: purity list is empty");
  std::filesystem::create_directories(args.out_dir);

  const RunManifest manifest =
      make_manifest("sweep", args.qubits, args.purities, args.blocks);

  std::vector<std::vector<TraceRecord>> traces;
  traces.reserve(args.purities.size());
  for (const double p : args.purities) {
    GroverConfig cfg;
    cfg.n_qubits = args.qubits;
    cfg.purity = p;
    cfg.n_blocks = args.blocks;
    traces.push_back(run_trace(cfg));

    const std::string name = "trace_p" + format_double(p) + "." + args.format;
    const std::string path = (std::filesystem::path(args.out_dir) / name).string();
    write_file_atomic(path, render_trace(manifest, traces.back(), args.format));
    out << path << '\n';
  }

  std::ostringstream combined;
  write_sweep_combined_csv(combined, manifest, args.purities, traces);
  const std::string combined_path =
      (std::filesystem::path(args.out_dir) / "sweep_combined.csv").string();
  write_file_atomic(combined_path, combined.str());
  out << combined_path << '\n';
  return 0;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out, std::ostream& err) {
  const std::vector<PropertyResult> results = run_verify_suite(options);

  std::size_t width = 0;
  for (const PropertyResult& r : results) width = std::max(width, r.name.size());

  int failed = 0;
  for (const PropertyResult& r : results) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.name << std::right
        << std::setw(6) << r.cases << "  " << (r.passed ? "PASS" : "FAIL") << '\n';
    if (!r.passed) {
      ++failed;
      err << r.failure_detail << '\n';
    }
  }
  out << results.size() << " properties, " << failed << " failed\n";
  return failed == 0 ? 0 : 1;
}

int cmd_threshold(const ThresholdArgs& args, std::ostream& out) {
  const BoundReport report = bound_report(args.qubits, args.purity);

  if (args.format == "json") {
    nlohmann::ordered_json j;
    j["manifest"] = manifest_json(make_manifest("threshold", args.qubits, {args.purity}, 0));
    nlohmann::ordered_json r;
    r["n_qubits"] = report.n_qubits;
    r["N"] = report.n_database;
    r["initial_entropy_bits"] = report.initial_entropy;
    r["threshold_entropy_bits"] = report.threshold_entropy;
    r["min_queries"] = report.min_queries;
    r["step_bound_bits"] = report.step_bound_bits;
    r["no_speedup_sufficient"] = report.no_speedup_sufficient;
    j["report"] = std::move(r);
    out << j.dump(2) << '\n';
    return 0;
  }

  out << "n_qubits:              " << report.n_qubits << '\n'
      << "N:                     " << report.n_database << '\n'
      << "initial_entropy_bits:  " << format_double(report.initial_entropy) << '\n'
      << "threshold_entropy_bits:" << ' ' << format_double(report.threshold_entropy) << '\n'
      << "min_queries:           " << format_double(report.min_queries) << '\n'
      << "step_bound_bits:       " << format_double(report.step_bound_bits) << '\n'
      << "no_speedup_sufficient: " << (report.no_speedup_sufficient ? "true" : "false") << '\n';
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capacity tracing for quantum search as a communication channel"};
  app.require_subcommand(1);

  TraceArgs trace_args;
  CLI::App* trace = app.add_subcommand(
      "trace", "Run one capacity trace and emit one record per block iteration");
  trace->add_option("--qubits", trace_args.qubits, "Register size in qubits")
      ->required()
      ->check(CLI::Range(1, 12));
  trace->add_option("--purity", trace_args.purity, "Per-qubit initial purity p")->capture_default_str()
      ->check(CLI::Range(0.0, 1.0));
  trace->add_option("--blocks", trace_args.blocks, "Number of block iterations")->capture_default_str()
      ->check(CLI::Range(0, kMaxBlocks));
  trace->add_option("--out", trace_args.out_path, "Output path (default: stdout)");
  trace->add_option("--format", trace_args.format, "Output format")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  SweepArgs sweep_args;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Run one trace per purity value plus a combined file");
  sweep->add_option("--qubits", sweep_args.qubits, "Register size in qubits")
      ->required()
      ->check(CLI::Range(1, 12));
  sweep->add_option("--purity", sweep_args.purities, "Comma-separated purity list")
      ->required()
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  sweep->add_option("--blocks", sweep_args.blocks, "Number of block iterations")->capture_default_str()
      ->check(CLI::Range(0, kMaxBlocks));
  sweep->add_option("--out", sweep_args.out_dir, "Output directory")->required();
  sweep->add_option("--format", sweep_args.format, "Per-purity file format")->capture_default_str()
      ->check(CLI::IsMember({"csv", "json"}));

  VerifyOptions verify_options;
  CLI::App* verify = app.add_subcommand("verify", "Run the numerical property suite");
  verify->add_option("--qubits-min", verify_options.qubits_min, "Smallest register size")->capture_default_str();
  verify->add_option("--qubits-max", verify_options.qubits_max, "Largest register size")->capture_default_str();
  verify->add_option("--tolerance", verify_options.tolerance, "Comparison tolerance")->capture_default_str();
  verify->add_option("--seed", verify_options.seed, "Seed for randomized cases")->capture_default_str();

  ThresholdArgs threshold_args;
  CLI::App* threshold =
      app.add_subcommand("threshold", "Evaluate the no-speedup entropy condition");
  threshold->add_option("--qubits", threshold_args.qubits, "Register size in qubits")
      ->required()
      ->check(CLI::Range(1, 12));
  threshold->add_option("--purity", threshold_args.purity, "Per-qubit initial purity p")
      ->required()
      ->check(CLI::Range(0.0, 1.0));
  threshold->add_option("--format", threshold_args.format, "Output format")->capture_default_str()
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (trace->parsed()) return cmd_trace(trace_args, out);
    if (sweep->parsed()) return cmd_sweep(sweep_args, out);
    if (verify->parsed()) return cmd_verify(verify_options, out, err);
    if (threshold->parsed()) return cmd_threshold(threshold_args, out);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "invalid arguments: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("qcap");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace qcap::cli
