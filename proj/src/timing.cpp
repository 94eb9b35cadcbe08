// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/timing.hpp"

#include <sstream>
#include <stdexcept>

namespace parqc {

namespace {

std::size_t row_index(PhysicalOpcode op) {
  switch (conditional_base(op)) {
    case PhysicalOpcode::PRx: return 0;
    case PhysicalOpcode::PRy: return 1;
    case PhysicalOpcode::PRz: return 2;
    case PhysicalOpcode::CRx: return 3;
    case PhysicalOpcode::Entangle: return 4;
    case PhysicalOpcode::Measure: return 5;
    default: break;
  }
  throw std::logic_error("unhandled opcode");
}

}  // namespace

const TimingModel::Row& TimingModel::row(PhysicalOpcode op) const {
  return rows_[row_index(op)];
}

std::uint64_t TimingModel::issue_cycles(PhysicalOpcode op) const {
  return 2 + row(op).param_words;
}

std::uint64_t TimingModel::exec_cycles(PhysicalOpcode op) const { return row(op).exec_cycles; }

TimingModel TimingModel::standard() {
  TimingModel m;
  m.rows_[row_index(PhysicalOpcode::PRx)] = {3, 62};
  m.rows_[row_index(PhysicalOpcode::PRy)] = {3, 62};
  m.rows_[row_index(PhysicalOpcode::PRz)] = {1, 11};
  m.rows_[row_index(PhysicalOpcode::CRx)] = {2, 62};
  m.rows_[row_index(PhysicalOpcode::Entangle)] = {1, 1160};
  m.rows_[row_index(PhysicalOpcode::Measure)] = {0, 400};
  return m;
}

TimingModel TimingModel::from_text(const std::string& text) {
  TimingModel m = standard();
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string opcode_word;
    if (!(line >> opcode_word)) continue;
    auto fail = [&](const std::string& what) {
      throw std::invalid_argument("timing line " + std::to_string(line_no) + ": " + what);
    };
    auto op = physical_opcode_from_name(opcode_word);
    if (!op) fail("unknown opcode '" + opcode_word + "'");
    if (is_conditional(*op)) {
      fail("conditional opcodes inherit their base rotation's timing");
    }
    std::uint64_t exec = 0;
    std::uint32_t words = 0;
    if (!(line >> exec >> words)) fail("expected '<opcode> <exec_cycles> <param_words>'");
    if (exec == 0) fail("execution must take at least one cycle");
    if (words > 64) fail("parameter word count out of range");
    std::string rest;
    if (line >> rest) fail("unexpected token '" + rest + "'");
    m.rows_[row_index(*op)] = {words, exec};
  }
  return m;
}

}  // namespace parqc
