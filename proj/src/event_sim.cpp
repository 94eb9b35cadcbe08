// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/event_sim.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

namespace parqc {

std::uint64_t event_sim_cycles(const PhysicalProgram& program, const TimingModel& timing,
                               std::uint32_t delta, bool honor_groups) {
  const auto& ins = program.instructions;
  if (ins.empty()) return 0;

  std::vector<std::uint64_t> exec_end(ins.size(), 0);
  std::unordered_map<std::uint64_t, std::uint64_t> node_free;
  std::uint64_t interface_free = 0;

  std::size_t i = 0;
  while (i < ins.size()) {
    std::size_t end = i + 1;
    if (honor_groups && ins[i].group) {
      while (end < ins.size() && ins[end].group == ins[i].group) ++end;
    }

    std::uint64_t start = interface_free;
    if (ins[i].tag == SeqTag::Serial && i > 0) start = std::max(start, exec_end[i - 1]);
    for (std::size_t m = i; m < end; ++m) {
      for (auto node : ins[m].targets) {
        auto it = node_free.find(node);
        if (it != node_free.end()) start = std::max(start, it->second);
      }
      if (ins[m].condition) start = std::max(start, exec_end[*ins[m].condition]);
    }

    std::uint64_t issue_end = start + timing.issue_cycles(ins[i].opcode) + delta;
    interface_free = issue_end;
    for (std::size_t m = i; m < end; ++m) {
      exec_end[m] = issue_end + timing.exec_cycles(ins[m].opcode);
      for (auto node : ins[m].targets) node_free[node] = exec_end[m];
    }
    i = end;
  }
  return exec_end.back();
}

}  // namespace parqc
