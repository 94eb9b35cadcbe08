// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "parqc/circuit.hpp"
#include "parqc/cx_template.hpp"
#include "parqc/hardware.hpp"
#include "parqc/physical.hpp"

namespace parqc {

// Relation between two neighbouring gates in a flat stream. Gates sharing
// a qubit are Serial. Disjoint gates are Parallel when they perform the
// same operation with the same canonical parameters, else Pipelined.
enum class GateRelation { Serial, Pipelined, Parallel };

GateRelation gate_relation(const LogicalInstruction& a, const LogicalInstruction& b);

// Length of the run of mutually disjoint, identical operations starting at
// `begin`: grows while the next gate is Parallel related to the previous
// one and touches no qubit seen earlier in the run. Always at least 1.
std::size_t parallel_run_length(const std::vector<LogicalInstruction>& stream,
                                std::size_t begin);

// Gate by gate lowering in stream order. Each rotation becomes two node
// rotations on its pair of data qubits; each CX instantiates the template
// once per data qubit pair, pair after pair in Semi mode and position by
// position across the four pairs in Fully mode (where all pairs sit on
// distinct nodes anyway). Sequencing tags come from the builder alone.
PhysicalProgram naive_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                const CxTemplate& tmpl);

// Stream aware lowering. Runs of identical disjoint gates are emitted so
// that instructions to distinct nodes sit back to back: CX runs interleave
// their template instances position by position, Semi mode rotation runs
// emit all first-slot rotations then all second-slot rotations, and a run
// pipelined against a following disjoint run hides its slot barrier inside
// the other run's stream. A lone CX pipelined against a following disjoint
// one qubit rotation pulls that rotation in behind its mergeable template
// row. Gates without such neighbours lower exactly as in naive_decompose.
PhysicalProgram optimized_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                    const CxTemplate& tmpl);

// Variant for the bitmap+bitmap encoding: within every run of identical
// disjoint gates, members are reordered so gates on heavily used subnets
// come first (count, then subnet id, then original position), which lets
// the group marker cut the run into rectangular subnet by controller
// blocks. Emission then follows optimized_decompose. Throws unless the
// mode actually uses the bitmap+bitmap scheme.
PhysicalProgram subbit_ncbit_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                       const CxTemplate& tmpl, const AddressingMode& mode);

}  // namespace parqc
