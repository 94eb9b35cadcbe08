// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>

#include "parqc/circuit.hpp"

namespace parqc {

// Dense 2^n x 2^n unitary of a circuit, little endian: qubit 0 selects the
// least significant bit of the basis index. Rotations use the half-angle
// convention Rx(t) = exp(-i t X / 2) and likewise for Ry, Rz. Intended as a
// reference oracle for small circuits; throws for more than 12 qubits.
Eigen::MatrixXcd circuit_unitary(const LogicalCircuit& circuit);

// 2x2 (or 4x4 for two-qubit kinds) matrix of a single gate. Two-qubit
// matrices place the first operand on the low bit.
Eigen::MatrixXcd gate_unitary(GateKind kind, const std::vector<double>& params);

// True when a == phase * b for some unit complex phase, within an
// elementwise absolute tolerance.
bool equal_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                              double tolerance);

}  // namespace parqc
