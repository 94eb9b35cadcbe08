// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parqc {

/// Logical gate vocabulary. The first four form the native basis every
/// circuit is lowered to before scheduling; the rest are accepted on input
/// and rewritten by transpile().
enum class GateKind {
  Rx,
  Ry,
  Rz,
  Cx,
  H,
  X,
  Y,
  Z,
  S,
  Sdg,
  T,
  Tdg,
  Cz,
  Swap,
};

bool is_basis_gate(GateKind k);
int gate_arity(GateKind k);
int gate_param_count(GateKind k);
std::string_view gate_name(GateKind k);
std::optional<GateKind> gate_from_name(std::string_view name);

/// Rotation angles are carried on a 16-bit grid: the canonical form of an
/// angle is its value mod 2*pi, rounded to the nearest multiple of
/// 2*pi / 2^16. Two angles are considered equal iff they land on the same
/// grid word.
inline constexpr int kAngleWordCount = 1 << 16;
std::uint16_t angle_word(double radians);
double canonical_angle(double radians);

struct LogicalInstruction {
  GateKind kind;
  std::vector<double> params;    // rotation angles, radians
  std::vector<std::uint32_t> operands;  // qubit indices; (control, target) for two-qubit gates
};

/// True iff both instructions have the same kind and all angle parameters
/// are identical after canonicalization. Operands are not compared.
bool params_equal(const LogicalInstruction& a, const LogicalInstruction& b);

struct LogicalCircuit {
  std::uint32_t num_qubits = 0;
  std::vector<LogicalInstruction> instructions;

  /// Throws std::invalid_argument on arity/param-count mismatches,
  /// out-of-range operands, or repeated operands within an instruction.
  void validate() const;
};

LogicalInstruction make_gate(GateKind kind, std::vector<std::uint32_t> operands,
                             std::vector<double> params = {});

}  // namespace parqc
