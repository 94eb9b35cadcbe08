// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "parqc/circuit.hpp"

namespace parqc {

// True when the two gates touch a common qubit and therefore must keep
// their relative order.
bool gates_depend(const LogicalInstruction& a, const LogicalInstruction& b);

struct Schedule {
  std::uint32_t num_qubits = 0;
  std::vector<std::vector<LogicalInstruction>> layers;

  LogicalCircuit flatten() const;
};

// Greedy as soon as possible layering: each gate lands in the earliest
// layer after the last gate sharing one of its qubits. Within a layer,
// gates sort by opcode, then canonical parameters, then lowest operand,
// so identical operations become adjacent in the flattened stream.
Schedule schedule_asap(const LogicalCircuit& circuit);

// One gate per layer in original order. Baseline input shape.
Schedule trivial_layers(const LogicalCircuit& circuit);

std::string dump_schedule(const Schedule& schedule);

}  // namespace parqc
