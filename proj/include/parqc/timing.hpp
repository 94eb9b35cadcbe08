// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "parqc/physical.hpp"

namespace parqc {

// Per opcode cost model, in controller clock cycles. Issuing an
// instruction costs two cycles of fixed decode work plus one cycle per
// timing parameter word; executing it occupies the addressed node for
// exec_cycles. Conditional rotations share the row of their base opcode.
class TimingModel {
 public:
  struct Row {
    std::uint32_t param_words;
    std::uint64_t exec_cycles;
  };

  static TimingModel standard();

  // Override format, one base opcode per line:
  //   <opcode> <exec_cycles> <param_words>
  // '#' starts a comment. Conditional opcodes are rejected since they
  // always mirror their base rotation. Throws std::invalid_argument.
  static TimingModel from_text(const std::string& text);

  std::uint64_t issue_cycles(PhysicalOpcode op) const;
  std::uint64_t exec_cycles(PhysicalOpcode op) const;

  std::uint64_t clock_hz() const { return clock_hz_; }
  double wall_seconds(std::uint64_t cycles) const {
    return static_cast<double>(cycles) / static_cast<double>(clock_hz_);
  }

 private:
  const Row& row(PhysicalOpcode op) const;

  std::array<Row, 6> rows_{};  // PRx, PRy, PRz, CRx, Entangle, Measure
  std::uint64_t clock_hz_ = 10'000'000;
};

}  // namespace parqc
