// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "parqc/circuit.hpp"
#include "parqc/cx_template.hpp"
#include "parqc/hardware.hpp"
#include "parqc/physical.hpp"
#include "parqc/timing.hpp"

namespace parqc {

// Built in circuit families. `seed` only matters for "random".
//   ghz              H then a CX ladder, fully sequential
//   ising            one transverse field layer plus even/odd coupling
//                    layers of CX Rz CX bricks
//   bv               H layer, CX fan in onto the last qubit, H layer
//   adder_like       ripple of CX Rz(pi/4) CX carry segments
//   qnn_like         Ry and Rz feature layers with a CX ring, twice
//   graphstate_like  H everywhere then a CZ ring
//   random           seeded uniform mix of basis gates
LogicalCircuit make_benchmark(std::string_view name, std::uint32_t qubits,
                              std::uint64_t seed = 0);

const std::vector<std::string>& benchmark_names();

struct PipelineConfig {
  AddressingMode mode;
  CxTemplate tmpl = CxTemplate::standard();
  TimingModel timing = TimingModel::standard();
  bool keep_program = false;  // retain the marked program for dumping
};

// Outcome of compiling and costing one circuit for one hardware mode:
//   baseline_cycles   naive lowering of the unscheduled stream
//   compiler_cycles   reordered and stream aware lowering, plain pipeline
//   combined_cycles   same program with address streaming and grouping
struct PipelineResult {
  AddressingMode mode;
  AddressWidths widths{};
  std::uint64_t rho = 1;
  std::uint32_t delta = 0;
  std::uint64_t baseline_cycles = 0;
  std::uint64_t compiler_cycles = 0;
  std::uint64_t combined_cycles = 0;
  std::size_t group_count = 0;
  PhysicalProgram program;  // only when keep_program was set

  double compiler_speedup() const;
  double hardware_speedup() const;
  double combined_speedup() const;
};

// Full flow: transpile, map, cost the naive stream, schedule, cost the
// stream aware lowering, pick the mode's emission order, mark groups and
// cost the encoded interface. Throws std::invalid_argument when the
// circuit needs more nodes than the mode provides.
PipelineResult run_pipeline(const LogicalCircuit& circuit, const PipelineConfig& config);

// Mode points swept per scheme: every power of two subnet count that
// keeps the fixed network size (1024 nodes Semi, 2048 Fully) valid for
// the scheme. Sisd contributes one balanced reference point.
std::vector<AddressingMode> sweep_modes(DistributionMode dist, EncodingScheme scheme,
                                        std::uint32_t interface_width = 16);

}  // namespace parqc
