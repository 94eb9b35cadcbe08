// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

#include "parqc/physical.hpp"
#include "parqc/timing.hpp"

namespace parqc {

// Discrete event replay of a program, independent of the analytic cost
// model. A single controller streams issue slots in program order; a slot
// may not start before the interface is free, before every node it
// addresses has finished its previous execution, before any measurement
// it is conditioned on has completed, or, when its first instruction
// carries a Serial tag, before the immediately preceding instruction has
// finished executing. A slot takes issue cycles plus `delta` address
// words; all of its instructions then execute simultaneously on their
// nodes. Returns the cycle at which the final instruction's execution
// ends. When `honor_groups` is set, instructions sharing a group id share
// one slot.
std::uint64_t event_sim_cycles(const PhysicalProgram& program, const TimingModel& timing,
                               std::uint32_t delta, bool honor_groups);

}  // namespace parqc
