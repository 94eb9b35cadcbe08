// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "parqc/bench.hpp"

namespace parqc {

struct ReportRow {
  std::string benchmark;
  DistributionMode dist;
  EncodingScheme scheme;
  std::uint64_t subnets = 1;
  std::uint64_t ncs = 1;
  std::uint32_t w_subnet = 0;
  std::uint32_t w_nc = 0;
  std::uint64_t rho = 1;
  std::uint32_t delta = 0;
  std::uint64_t t_baseline = 0;
  std::uint64_t t_compiler = 0;
  std::uint64_t t_combined = 0;
  double compiler_speedup = 1.0;
  double hardware_speedup = 1.0;
  double combined_speedup = 1.0;
};

ReportRow make_report_row(const std::string& benchmark, const PipelineResult& result);

// One line per row:
// benchmark,dist,scheme,M,K,W_S,W_NC,rho,delta,T_baseline,T_compiler,
// T_combined,compiler_speedup,hardware_speedup,combined_speedup
// Speedups are written with however many digits the exact double needs,
// so parse_report recovers every field bit for bit.
std::string emit_csv(const std::vector<ReportRow>& rows);

// Inverse of emit_csv. Throws std::invalid_argument on malformed text.
std::vector<ReportRow> parse_report(const std::string& csv);

// Self contained scatter chart, one panel per scheme present in the rows.
// x walks the swept modes labelled by address widths, y is combined
// speedup on a log scale, one dot per benchmark, a black bar at each
// mode's average.
std::string emit_svg(const std::vector<ReportRow>& rows);

}  // namespace parqc
