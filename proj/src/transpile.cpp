// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/transpile.hpp"

#include <numbers>
#include <stdexcept>

namespace parqc {

namespace {

constexpr double kPi = std::numbers::pi;

void emit_h(std::vector<LogicalInstruction>& out, std::uint32_t q) {
  out.push_back(make_gate(GateKind::Rz, {q}, {kPi / 2}));
  out.push_back(make_gate(GateKind::Rx, {q}, {kPi / 2}));
  out.push_back(make_gate(GateKind::Rz, {q}, {kPi / 2}));
}

void emit_gate(std::vector<LogicalInstruction>& out, const LogicalInstruction& g) {
  switch (g.kind) {
    case GateKind::Rx:
    case GateKind::Ry:
    case GateKind::Rz:
    case GateKind::Cx:
      out.push_back(g);
      return;
    case GateKind::X:
      out.push_back(make_gate(GateKind::Rx, g.operands, {kPi}));
      return;
    case GateKind::Y:
      out.push_back(make_gate(GateKind::Ry, g.operands, {kPi}));
      return;
    case GateKind::Z:
      out.push_back(make_gate(GateKind::Rz, g.operands, {kPi}));
      return;
    case GateKind::S:
      out.push_back(make_gate(GateKind::Rz, g.operands, {kPi / 2}));
      return;
    case GateKind::Sdg:
      out.push_back(make_gate(GateKind::Rz, g.operands, {-kPi / 2}));
      return;
    case GateKind::T:
      out.push_back(make_gate(GateKind::Rz, g.operands, {kPi / 4}));
      return;
    case GateKind::Tdg:
      out.push_back(make_gate(GateKind::Rz, g.operands, {-kPi / 4}));
      return;
    case GateKind::H:
      emit_h(out, g.operands[0]);
      return;
    case GateKind::Cz:
      emit_h(out, g.operands[1]);
      out.push_back(make_gate(GateKind::Cx, g.operands));
      emit_h(out, g.operands[1]);
      return;
    case GateKind::Swap:
      out.push_back(make_gate(GateKind::Cx, {g.operands[0], g.operands[1]}));
      out.push_back(make_gate(GateKind::Cx, {g.operands[1], g.operands[0]}));
      out.push_back(make_gate(GateKind::Cx, {g.operands[0], g.operands[1]}));
      return;
  }
  throw std::logic_error("unhandled gate kind");
}

}  // namespace

LogicalCircuit transpile(const LogicalCircuit& circuit) {
  circuit.validate();
  LogicalCircuit out;
  out.num_qubits = circuit.num_qubits;
  out.instructions.reserve(circuit.instructions.size());
  for (const auto& g : circuit.instructions) emit_gate(out.instructions, g);
  return out;
}

}  // namespace parqc
