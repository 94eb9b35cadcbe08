// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace parqc {

namespace {

constexpr const char* kCsvHeader =
    "benchmark,dist,scheme,M,K,W_S,W_NC,rho,delta,T_baseline,T_compiler,T_combined,"
    "compiler_speedup,hardware_speedup,combined_speedup";

// Chart labels: short and readable.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// CSV fields: the shortest digit string that parses back to the same double.
std::string csv_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

template <typename T>
T parse_number(std::string_view field, const char* what) {
  T value{};
  auto res = std::from_chars(field.data(), field.data() + field.size(), value);
  if (res.ec != std::errc() || res.ptr != field.data() + field.size()) {
    throw std::invalid_argument("report: bad " + std::string(what) + " '" +
                                std::string(field) + "'");
  }
  return value;
}

const char* benchmark_color(const std::string& name) {
  static const std::map<std::string, const char*> colors = {
      {"ghz", "#e41a1c"},        {"ising", "#377eb8"},
      {"bv", "#4daf4a"},         {"adder_like", "#984ea3"},
      {"qnn_like", "#ff7f00"},   {"graphstate_like", "#a65628"},
      {"random", "#f781bf"},
  };
  auto it = colors.find(name);
  return it == colors.end() ? "#666666" : it->second;
}

}  // namespace

ReportRow make_report_row(const std::string& benchmark, const PipelineResult& r) {
  ReportRow row;
  row.benchmark = benchmark;
  row.dist = r.mode.dist;
  row.scheme = r.mode.scheme;
  row.subnets = r.mode.num_subnets;
  row.ncs = r.mode.ncs_per_subnet;
  row.w_subnet = r.widths.subnet;
  row.w_nc = r.widths.nc;
  row.rho = r.rho;
  row.delta = r.delta;
  row.t_baseline = r.baseline_cycles;
  row.t_compiler = r.compiler_cycles;
  row.t_combined = r.combined_cycles;
  row.compiler_speedup = r.compiler_speedup();
  row.hardware_speedup = r.hardware_speedup();
  row.combined_speedup = r.combined_speedup();
  return row;
}

std::string emit_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const auto& r : rows) {
    out << r.benchmark << ',' << distribution_name(r.dist) << ',' << scheme_name(r.scheme)
        << ',' << r.subnets << ',' << r.ncs << ',' << r.w_subnet << ',' << r.w_nc << ','
        << r.rho << ',' << r.delta << ',' << r.t_baseline << ',' << r.t_compiler << ','
        << r.t_combined << ',' << csv_double(r.compiler_speedup) << ','
        << csv_double(r.hardware_speedup) << ',' << csv_double(r.combined_speedup) << '\n';
  }
  return out.str();
}

std::vector<ReportRow> parse_report(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw std::invalid_argument("report: missing or unexpected header line");
  }
  std::vector<ReportRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto f = split_fields(line);
    if (f.size() != 15) {
      throw std::invalid_argument("report: row has " + std::to_string(f.size()) +
                                  " fields, want 15");
    }
    ReportRow r;
    r.benchmark = std::string(f[0]);
    auto dist = distribution_from_name(f[1]);
    auto scheme = scheme_from_name(f[2]);
    if (!dist || !scheme) {
      throw std::invalid_argument("report: unknown mode in row '" + line + "'");
    }
    r.dist = *dist;
    r.scheme = *scheme;
    r.subnets = parse_number<std::uint64_t>(f[3], "M");
    r.ncs = parse_number<std::uint64_t>(f[4], "K");
    r.w_subnet = parse_number<std::uint32_t>(f[5], "W_S");
    r.w_nc = parse_number<std::uint32_t>(f[6], "W_NC");
    r.rho = parse_number<std::uint64_t>(f[7], "rho");
    r.delta = parse_number<std::uint32_t>(f[8], "delta");
    r.t_baseline = parse_number<std::uint64_t>(f[9], "T_baseline");
    r.t_compiler = parse_number<std::uint64_t>(f[10], "T_compiler");
    r.t_combined = parse_number<std::uint64_t>(f[11], "T_combined");
    r.compiler_speedup = parse_number<double>(f[12], "compiler_speedup");
    r.hardware_speedup = parse_number<double>(f[13], "hardware_speedup");
    r.combined_speedup = parse_number<double>(f[14], "combined_speedup");
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string emit_svg(const std::vector<ReportRow>& rows) {
  // Collect panels: one per (dist, scheme), modes ordered by subnet count.
  struct Panel {
    std::string title;
    std::vector<std::pair<std::uint64_t, std::string>> modes;  // subnets, label
    std::map<std::uint64_t, std::vector<const ReportRow*>> by_mode;
  };
  std::map<std::pair<int, int>, Panel> panels;
  for (const auto& r : rows) {
    auto key = std::make_pair(static_cast<int>(r.dist), static_cast<int>(r.scheme));
    auto& p = panels[key];
    if (p.title.empty()) {
      p.title = std::string(distribution_name(r.dist)) + " / " + scheme_name(r.scheme);
    }
    if (!p.by_mode.count(r.subnets)) {
      p.modes.push_back({r.subnets,
                         "(" + std::to_string(r.w_subnet) + "," + std::to_string(r.w_nc) + ")"});
    }
    p.by_mode[r.subnets].push_back(&r);
  }
  for (auto& [key, p] : panels) std::sort(p.modes.begin(), p.modes.end());

  const double panel_w = 960, panel_h = 240, margin_l = 70, margin_b = 46, margin_t = 28;
  const double total_h = std::max<std::size_t>(panels.size(), 1) * panel_h + 20;

  double lo = 1e300, hi = -1e300;
  for (const auto& r : rows) {
    lo = std::min(lo, r.combined_speedup);
    hi = std::max(hi, r.combined_speedup);
  }
  if (rows.empty()) lo = hi = 1.0;
  lo = std::min(lo, 1.0) / 1.3;
  hi = std::max(hi, 1.0) * 1.3;
  const double log_lo = std::log10(lo), log_hi = std::log10(hi);

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1000\" height=\"" << fmt(total_h)
      << "\" viewBox=\"0 0 1000 " << fmt(total_h) << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"1000\" height=\"" << fmt(total_h)
      << "\" fill=\"white\"/>\n";

  double panel_y = 10;
  for (const auto& [key, p] : panels) {
    const double plot_x = margin_l, plot_y = panel_y + margin_t;
    const double plot_w = panel_w - margin_l - 20;
    const double plot_h = panel_h - margin_t - margin_b;
    auto y_of = [&](double speedup) {
      double t = (std::log10(std::max(speedup, 1e-12)) - log_lo) / (log_hi - log_lo);
      return plot_y + plot_h * (1.0 - t);
    };

    out << "<text x=\"" << fmt(plot_x) << "\" y=\"" << fmt(panel_y + 16)
        << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#222\">" << p.title
        << " combined speedup</text>\n";
    out << "<rect x=\"" << fmt(plot_x) << "\" y=\"" << fmt(plot_y) << "\" width=\""
        << fmt(plot_w) << "\" height=\"" << fmt(plot_h)
        << "\" fill=\"none\" stroke=\"#999\"/>\n";
    // Unity line.
    out << "<line x1=\"" << fmt(plot_x) << "\" y1=\"" << fmt(y_of(1.0)) << "\" x2=\""
        << fmt(plot_x + plot_w) << "\" y2=\"" << fmt(y_of(1.0))
        << "\" stroke=\"#ccc\" stroke-dasharray=\"4 3\"/>\n";
    out << "<text x=\"" << fmt(plot_x - 6) << "\" y=\"" << fmt(y_of(1.0) + 4)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#666\" "
           "text-anchor=\"end\">1x</text>\n";

    const std::size_t n_modes = p.modes.size();
    for (std::size_t m = 0; m < n_modes; ++m) {
      double x = plot_x + plot_w * (n_modes == 1 ? 0.5 : (0.08 + 0.84 * m / (n_modes - 1)));
      const auto& [subnets, label] = p.modes[m];
      out << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(plot_y + plot_h + 16)
          << "\" font-family=\"sans-serif\" font-size=\"9\" fill=\"#444\" "
             "text-anchor=\"middle\">"
          << label << "</text>\n";
      double sum = 0;
      const auto& cell = p.by_mode.at(subnets);
      for (const auto* r : cell) {
        out << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y_of(r->combined_speedup))
            << "\" r=\"3.5\" fill=\"" << benchmark_color(r->benchmark)
            << "\" fill-opacity=\"0.75\"/>\n";
        sum += r->combined_speedup;
      }
      double avg = sum / static_cast<double>(cell.size());
      out << "<line x1=\"" << fmt(x - 7) << "\" y1=\"" << fmt(y_of(avg)) << "\" x2=\""
          << fmt(x + 7) << "\" y2=\"" << fmt(y_of(avg))
          << "\" stroke=\"black\" stroke-width=\"2.5\"/>\n";
    }
    panel_y += panel_h;
  }

  // Legend along the bottom of the first panel row.
  double lx = margin_l;
  for (const auto& name : benchmark_names()) {
    out << "<circle cx=\"" << fmt(lx) << "\" cy=\"" << fmt(total_h - 8)
        << "\" r=\"3.5\" fill=\"" << benchmark_color(name) << "\"/>\n";
    out << "<text x=\"" << fmt(lx + 7) << "\" y=\"" << fmt(total_h - 4)
        << "\" font-family=\"sans-serif\" font-size=\"10\" fill=\"#333\">" << name
        << "</text>\n";
    lx += 13.0 * (name.size() < 6 ? 6 : name.size());
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace parqc
