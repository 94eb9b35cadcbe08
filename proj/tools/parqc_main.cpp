// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: compiles built in or OpenQASM circuits for a
// set of hardware modes, writes the run time comparison as CSV and SVG
// and optionally dumps the lowered instruction streams.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "parqc/bench.hpp"
#include "parqc/qasm.hpp"
#include "parqc/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

// "all", a single count, a comma list, or an inclusive range "a..b".
// Counts must be powers of two.
std::vector<std::uint64_t> parse_subnets(const std::string& text) {
  std::vector<std::uint64_t> out;
  auto push = [&](const std::string& tok) {
    std::size_t used = 0;
    std::uint64_t v = std::stoull(tok, &used);
    if (used != tok.size() || v == 0 || (v & (v - 1)) != 0) {
      throw std::runtime_error("subnet counts must be powers of two, got '" + tok + "'");
    }
    out.push_back(v);
  };
  auto dots = text.find("..");
  if (dots != std::string::npos) {
    std::size_t used = 0;
    std::uint64_t lo = std::stoull(text.substr(0, dots), &used);
    std::uint64_t hi = std::stoull(text.substr(dots + 2), &used);
    if (lo == 0 || (lo & (lo - 1)) != 0 || hi < lo) {
      throw std::runtime_error("bad subnet range '" + text + "'");
    }
    for (std::uint64_t m = lo; m <= hi; m *= 2) out.push_back(m);
    return out;
  }
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) push(tok);
  if (out.empty()) throw std::runtime_error("empty subnet list");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Compiles quantum circuits for distributed node networks and compares "
      "run times across instruction address encodings"};

  std::string dist_name = "semi";
  std::string scheme_arg = "all";
  std::string subnets_arg = "all";
  std::uint32_t qubits = 16;
  std::string bench_arg = "all";
  std::string qasm_path;
  std::uint32_t interface_width = 16;
  std::string timing_path;
  std::string template_path;
  std::string out_dir = ".";
  std::uint64_t seed = 1;
  bool dump = false;

  app.add_option("--dist", dist_name, "Distribution mode: semi or fully")
      ->check(CLI::IsMember({"semi", "fully"}));
  app.add_option("--scheme", scheme_arg,
                 "Encoding scheme: sisd, subid-ncbit, subbit-ncid, subbit-ncbit or all");
  app.add_option("--subnets", subnets_arg,
                 "Subnet counts: 'all' for the default sweep, a power of two, a comma "
                 "list or a range like 4..64");
  app.add_option("--qubits", qubits, "Logical qubits for built in benchmarks");
  app.add_option("--bench", bench_arg, "Benchmark name or 'all'");
  app.add_option("--qasm", qasm_path, "Compile this OpenQASM file instead of benchmarks");
  app.add_option("--interface-width", interface_width, "Controller interface width in bits");
  app.add_option("--timing", timing_path, "Timing model override file");
  app.add_option("--cx-template", template_path, "CX teleportation template file");
  app.add_option("--out", out_dir, "Output directory for results.csv and speedups.svg");
  app.add_option("--seed", seed, "Seed for the random benchmark");
  app.add_flag("--dump-program", dump, "Print each compiled instruction stream");

  CLI11_PARSE(app, argc, argv);

  try {
    auto dist = *parqc::distribution_from_name(dist_name);

    std::vector<parqc::EncodingScheme> schemes;
    if (scheme_arg == "all") {
      schemes = {parqc::EncodingScheme::Sisd, parqc::EncodingScheme::SubIdNcBit,
                 parqc::EncodingScheme::SubBitNcId, parqc::EncodingScheme::SubBitNcBit};
    } else if (auto s = parqc::scheme_from_name(scheme_arg)) {
      schemes = {*s};
    } else {
      throw std::runtime_error("unknown scheme '" + scheme_arg + "'");
    }

    std::vector<std::pair<std::string, parqc::LogicalCircuit>> circuits;
    if (!qasm_path.empty()) {
      std::vector<std::string> warnings;
      auto circuit = parqc::parse_qasm(read_file(qasm_path), &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      circuits.push_back({qasm_path, circuit});
    } else if (bench_arg == "all") {
      for (const auto& name : parqc::benchmark_names()) {
        circuits.push_back({name, parqc::make_benchmark(name, qubits, seed)});
      }
    } else {
      circuits.push_back({bench_arg, parqc::make_benchmark(bench_arg, qubits, seed)});
    }

    parqc::PipelineConfig config;
    if (!template_path.empty()) {
      config.tmpl = parqc::parse_cx_template(read_file(template_path));
    }
    if (!timing_path.empty()) {
      config.timing = parqc::TimingModel::from_text(read_file(timing_path));
    }
    config.keep_program = dump;

    std::vector<parqc::ReportRow> rows;
    std::size_t failures = 0;
    for (const auto& scheme : schemes) {
      std::vector<parqc::AddressingMode> modes;
      if (subnets_arg == "all") {
        modes = parqc::sweep_modes(dist, scheme, interface_width);
      } else {
        const std::uint64_t network = dist == parqc::DistributionMode::Semi ? 1024 : 2048;
        for (auto m : parse_subnets(subnets_arg)) {
          if (m > network) throw std::runtime_error("subnet count exceeds the network size");
          modes.push_back({dist, scheme, m, network / m, interface_width});
        }
      }
      for (const auto& mode : modes) {
        config.mode = mode;
        for (const auto& [name, circuit] : circuits) {
          try {
            auto result = parqc::run_pipeline(circuit, config);
            rows.push_back(parqc::make_report_row(name, result));
            if (dump) {
              std::cout << "# " << name << " on " << mode.describe() << "\n"
                        << parqc::dump_program(result.program);
            }
          } catch (const std::exception& e) {
            std::cerr << "skipped " << name << " on " << mode.describe() << ": " << e.what()
                      << "\n";
            ++failures;
          }
        }
      }
    }

    if (!rows.empty()) {
      write_file(out_dir + "/results.csv", parqc::emit_csv(rows));
      write_file(out_dir + "/speedups.svg", parqc::emit_svg(rows));
      std::printf("%-18s %-22s %10s %10s %10s %8s %8s %8s\n", "benchmark", "mode", "baseline",
                  "compiler", "combined", "comp_x", "hw_x", "total_x");
      for (const auto& r : rows) {
        std::string mode = std::string(parqc::scheme_name(r.scheme)) + " M=" +
                           std::to_string(r.subnets) + " K=" + std::to_string(r.ncs);
        std::printf("%-18s %-22s %10llu %10llu %10llu %8.3f %8.3f %8.3f\n",
                    r.benchmark.c_str(), mode.c_str(),
                    static_cast<unsigned long long>(r.t_baseline),
                    static_cast<unsigned long long>(r.t_compiler),
                    static_cast<unsigned long long>(r.t_combined), r.compiler_speedup,
                    r.hardware_speedup, r.combined_speedup);
      }
      std::printf("wrote %s/results.csv and %s/speedups.svg\n", out_dir.c_str(),
                  out_dir.c_str());
    }
    if (rows.empty() && failures > 0) return 2;
    return failures > 0 ? 2 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
