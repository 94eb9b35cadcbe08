// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "parqc/hardware.hpp"
#include "parqc/physical.hpp"

namespace parqc {

// True when one instruction of the given encoding can address exactly this
// set of distinct nodes at once.
//   sisd          a single node
//   subid-ncbit   any controller subset of one subnet
//   subbit-ncid   one controller slot across any subnet subset
//   subbit-ncbit  any full rectangle: subnet subset times controller subset
bool nodes_coaddressable(const std::vector<std::uint64_t>& nodes, const AddressingMode& mode);

// Walks every parallel run of the program and greedily merges neighbouring
// instructions into single issue groups: members must perform the same
// operation on disjoint nodes whose union stays addressable by one
// instruction. Members get a shared group id. Instructions left ungrouped
// drop from Parallel back to Pipelined; under sisd everything does.
// Returns the number of groups marked.
std::size_t mark_groups(PhysicalProgram& program, const AddressingMode& mode);

// Independent re-check of a marked program: group members are contiguous,
// at least two instructions, identical operations, node disjoint, their
// union addressable, and no wider than the encoding's fan out. Throws
// std::logic_error on the first violation; returns the group count.
std::size_t validate_groups(const PhysicalProgram& program, const AddressingMode& mode);

}  // namespace parqc
