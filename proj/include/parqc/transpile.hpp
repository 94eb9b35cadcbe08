// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "parqc/circuit.hpp"

namespace parqc {

// Rewrites a circuit so that every instruction uses the native set
// {Rx, Ry, Rz, CX}. Clifford shorthands expand to fixed-angle rotations,
// H becomes the three-rotation ladder Rz(pi/2) Rx(pi/2) Rz(pi/2), CZ is
// conjugated into CX by that ladder on the target, and SWAP becomes the
// usual triple of CX gates. Circuits already in the native set pass
// through unchanged. The result is unitarily equivalent to the input up
// to a global phase.
LogicalCircuit transpile(const LogicalCircuit& circuit);

}  // namespace parqc
