// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "parqc/hardware.hpp"
#include "parqc/physical.hpp"
#include "parqc/timing.hpp"

namespace parqc {

enum class SegmentKind { Serial, Pipelined, Parallel };

// Half open ranges never overlap; [first, last] is inclusive.
struct Segment {
  SegmentKind kind;
  std::uint32_t first;
  std::uint32_t last;
};

// Splits a tagged program into maximal runs of one class. A Pipelined or
// Parallel run chains from the instruction before it, so when that
// predecessor is Serial tagged it joins the run as its head; Serial
// stretches left over form Serial segments.
std::vector<Segment> segment_program(const PhysicalProgram& program);

// Analytic cost of a program in controller cycles.
//
// Instructions form issue chains broken at every Serial tag: the barrier
// drains the open chain and starts a new one. A chain costs the sum of
// its issue slots plus its last execution; a lone Serial instruction is a
// chain of one and pays full issue and execution, so an all Serial
// program sums both per instruction. When `honor_groups` is set,
// instructions sharing a group id collapse into a single issue slot;
// otherwise each pays its own.
std::uint64_t billed_cycles(const PhysicalProgram& program, const TimingModel& timing,
                            std::uint32_t delta, bool honor_groups);

// Cost on a plain pipeline: no address streaming overhead, no single
// issue grouping. The baseline and compiler-only numbers use this.
std::uint64_t runtime_default(const PhysicalProgram& program, const TimingModel& timing);

// Cost on the encoded interface: per instruction address streaming plus
// whatever grouping was marked for the mode.
std::uint64_t runtime_parallel(const PhysicalProgram& program, const TimingModel& timing,
                               const AddressingMode& mode);

}  // namespace parqc
