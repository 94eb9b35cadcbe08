// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/runtime.hpp"

namespace parqc {

std::vector<Segment> segment_program(const PhysicalProgram& program) {
  const auto& ins = program.instructions;
  std::vector<Segment> out;
  if (ins.empty()) return out;

  auto flush_serial = [&](std::size_t begin, std::size_t end) {
    if (begin >= end) return;
    out.push_back({SegmentKind::Serial, static_cast<std::uint32_t>(begin),
                   static_cast<std::uint32_t>(end - 1)});
  };

  std::size_t serial_begin = 0;
  std::size_t i = 0;
  while (i < ins.size()) {
    if (ins[i].tag == SeqTag::Serial) {
      ++i;
      continue;
    }
    // A run of one non serial class. It chains from the instruction before
    // it, so a Serial predecessor joins as the run's head; a predecessor
    // inside the previous run stays there.
    std::size_t head = ins[i - 1].tag == SeqTag::Serial ? i - 1 : i;
    std::size_t end = i;
    while (end + 1 < ins.size() && ins[end + 1].tag == ins[i].tag) ++end;
    flush_serial(serial_begin, head);
    out.push_back({ins[i].tag == SeqTag::Parallel ? SegmentKind::Parallel
                                                  : SegmentKind::Pipelined,
                   static_cast<std::uint32_t>(head), static_cast<std::uint32_t>(end)});
    serial_begin = end + 1;
    i = end + 1;
  }
  flush_serial(serial_begin, ins.size());
  return out;
}

std::uint64_t billed_cycles(const PhysicalProgram& program, const TimingModel& timing,
                            std::uint32_t delta, bool honor_groups) {
  const auto& ins = program.instructions;
  std::uint64_t total = 0;

  // Issue chains break at every Serial tag: the barrier drains the open
  // chain (its issue slots plus the last execution), then starts a new
  // one. A group spans one issue slot no matter where segment boundaries
  // fall, which keeps this sum equal to the event model on programs whose
  // chains execute in nondecreasing time.
  std::uint64_t chain_issue = 0;
  std::uint64_t chain_tail_exec = 0;
  bool chain_open = false;

  std::size_t i = 0;
  while (i < ins.size()) {
    if (chain_open && ins[i].tag == SeqTag::Serial) {
      total += chain_issue + chain_tail_exec;
      chain_issue = 0;
      chain_tail_exec = 0;
    }
    std::size_t j = i + 1;
    if (honor_groups && ins[i].group) {
      while (j < ins.size() && ins[j].group == ins[i].group) ++j;
    }
    chain_issue += timing.issue_cycles(ins[i].opcode) + delta;
    chain_tail_exec = timing.exec_cycles(ins[j - 1].opcode);
    chain_open = true;
    i = j;
  }
  if (chain_open) total += chain_issue + chain_tail_exec;
  return total;
}

std::uint64_t runtime_default(const PhysicalProgram& program, const TimingModel& timing) {
  return billed_cycles(program, timing, 0, false);
}

std::uint64_t runtime_parallel(const PhysicalProgram& program, const TimingModel& timing,
                               const AddressingMode& mode) {
  mode.validate();
  return billed_cycles(program, timing, mode.delta(), true);
}

}  // namespace parqc
