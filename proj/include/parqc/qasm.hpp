// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "parqc/circuit.hpp"

namespace parqc {

class QasmError : public std::runtime_error {
 public:
  QasmError(const std::string& message, int line, int column)
      : std::runtime_error(message + " at line " + std::to_string(line) + ", column " +
                           std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Parses a single-register OpenQASM 2 program restricted to the gate set in
/// GateKind. Angle arguments may be numeric literals or pi-fraction
/// expressions (e.g. "pi/2", "-3*pi/4"). measure and barrier statements are
/// dropped; each drop appends a note to *warnings when provided. creg
/// declarations and qelib includes are accepted and ignored.
LogicalCircuit parse_qasm(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Canonical re-emission; parse_qasm(emit_qasm(c)) reproduces c exactly.
std::string emit_qasm(const LogicalCircuit& circuit);

}  // namespace parqc
