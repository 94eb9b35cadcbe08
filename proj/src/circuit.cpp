// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/circuit.hpp"

#include <cmath>
#include <numbers>

namespace parqc {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct GateInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  int params;
  bool basis;
};

constexpr GateInfo kGateTable[] = {
    {GateKind::Rx, "rx", 1, 1, true},   {GateKind::Ry, "ry", 1, 1, true},
    {GateKind::Rz, "rz", 1, 1, true},   {GateKind::Cx, "cx", 2, 0, true},
    {GateKind::H, "h", 1, 0, false},    {GateKind::X, "x", 1, 0, false},
    {GateKind::Y, "y", 1, 0, false},    {GateKind::Z, "z", 1, 0, false},
    {GateKind::S, "s", 1, 0, false},    {GateKind::Sdg, "sdg", 1, 0, false},
    {GateKind::T, "t", 1, 0, false},    {GateKind::Tdg, "tdg", 1, 0, false},
    {GateKind::Cz, "cz", 2, 0, false},  {GateKind::Swap, "swap", 2, 0, false},
};

const GateInfo& info(GateKind k) { return kGateTable[static_cast<int>(k)]; }
}  // namespace

bool is_basis_gate(GateKind k) { return info(k).basis; }
int gate_arity(GateKind k) { return info(k).arity; }
int gate_param_count(GateKind k) { return info(k).params; }
std::string_view gate_name(GateKind k) { return info(k).name; }

std::optional<GateKind> gate_from_name(std::string_view name) {
  for (const auto& g : kGateTable) {
    if (g.name == name) return g.kind;
  }
  return std::nullopt;
}

std::uint16_t angle_word(double radians) {
  double wrapped = std::fmod(radians, kTwoPi);
  if (wrapped < 0) wrapped += kTwoPi;
  auto word = static_cast<long long>(std::llround(wrapped / kTwoPi * kAngleWordCount));
  return static_cast<std::uint16_t>(word & (kAngleWordCount - 1));
}

double canonical_angle(double radians) {
  return static_cast<double>(angle_word(radians)) * kTwoPi / kAngleWordCount;
}

bool params_equal(const LogicalInstruction& a, const LogicalInstruction& b) {
  if (a.kind != b.kind || a.params.size() != b.params.size()) return false;
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (angle_word(a.params[i]) != angle_word(b.params[i])) return false;
  }
  return true;
}

void LogicalCircuit::validate() const {
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& g = instructions[i];
    const auto where = "instruction " + std::to_string(i);
    if (g.operands.size() != static_cast<std::size_t>(gate_arity(g.kind))) {
      throw std::invalid_argument(where + ": operand count mismatch for " +
                                  std::string(gate_name(g.kind)));
    }
    if (g.params.size() != static_cast<std::size_t>(gate_param_count(g.kind))) {
      throw std::invalid_argument(where + ": parameter count mismatch for " +
                                  std::string(gate_name(g.kind)));
    }
    for (auto q : g.operands) {
      if (q >= num_qubits) {
        throw std::invalid_argument(where + ": qubit " + std::to_string(q) +
                                    " out of range (have " + std::to_string(num_qubits) + ")");
      }
    }
    if (g.operands.size() == 2 && g.operands[0] == g.operands[1]) {
      throw std::invalid_argument(where + ": repeated operand");
    }
  }
}

LogicalInstruction make_gate(GateKind kind, std::vector<std::uint32_t> operands,
                             std::vector<double> params) {
  return LogicalInstruction{kind, std::move(params), std::move(operands)};
}

}  // namespace parqc
