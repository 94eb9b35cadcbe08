// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/physical.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "parqc/circuit.hpp"

namespace parqc {

const char* physical_opcode_name(PhysicalOpcode op) {
  switch (op) {
    case PhysicalOpcode::PRx: return "prx";
    case PhysicalOpcode::PRy: return "pry";
    case PhysicalOpcode::PRz: return "prz";
    case PhysicalOpcode::CRx: return "crx";
    case PhysicalOpcode::Entangle: return "entangle";
    case PhysicalOpcode::Measure: return "measure";
    case PhysicalOpcode::CondPRx: return "cond_prx";
    case PhysicalOpcode::CondPRy: return "cond_pry";
    case PhysicalOpcode::CondPRz: return "cond_prz";
  }
  return "?";
}

std::optional<PhysicalOpcode> physical_opcode_from_name(std::string_view name) {
  for (auto op : {PhysicalOpcode::PRx, PhysicalOpcode::PRy, PhysicalOpcode::PRz,
                  PhysicalOpcode::CRx, PhysicalOpcode::Entangle, PhysicalOpcode::Measure,
                  PhysicalOpcode::CondPRx, PhysicalOpcode::CondPRy, PhysicalOpcode::CondPRz}) {
    if (name == physical_opcode_name(op)) return op;
  }
  return std::nullopt;
}

bool is_conditional(PhysicalOpcode op) {
  return op == PhysicalOpcode::CondPRx || op == PhysicalOpcode::CondPRy ||
         op == PhysicalOpcode::CondPRz;
}

bool is_rotation(PhysicalOpcode op) {
  return op != PhysicalOpcode::Entangle && op != PhysicalOpcode::Measure;
}

PhysicalOpcode conditional_base(PhysicalOpcode op) {
  switch (op) {
    case PhysicalOpcode::CondPRx: return PhysicalOpcode::PRx;
    case PhysicalOpcode::CondPRy: return PhysicalOpcode::PRy;
    case PhysicalOpcode::CondPRz: return PhysicalOpcode::PRz;
    default: return op;
  }
}

const char* seq_tag_name(SeqTag tag) {
  switch (tag) {
    case SeqTag::Serial: return "S";
    case SeqTag::Pipelined: return "P";
    case SeqTag::Parallel: return "||";
  }
  return "?";
}

bool PhysicalInstruction::same_operation(const PhysicalInstruction& other) const {
  if (opcode != other.opcode || params.size() != other.params.size()) return false;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (angle_word(params[i]) != angle_word(other.params[i])) return false;
  }
  return true;
}

void PhysicalProgram::validate() const {
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    const auto& ins = instructions[i];
    std::size_t want_targets = ins.opcode == PhysicalOpcode::Entangle ? 2 : 1;
    if (ins.targets.size() != want_targets) {
      throw std::logic_error("instruction " + std::to_string(i) + ": bad target count");
    }
    if (want_targets == 2 && ins.targets[0] == ins.targets[1]) {
      throw std::logic_error("instruction " + std::to_string(i) + ": entangle targets equal");
    }
    std::size_t want_params = is_rotation(ins.opcode) ? 1 : 0;
    if (ins.params.size() != want_params) {
      throw std::logic_error("instruction " + std::to_string(i) + ": bad parameter count");
    }
    if (ins.condition.has_value()) {
      if (!is_conditional(ins.opcode)) {
        throw std::logic_error("instruction " + std::to_string(i) +
                               ": condition on an unconditional opcode");
      }
      if (*ins.condition >= i ||
          instructions[*ins.condition].opcode != PhysicalOpcode::Measure) {
        throw std::logic_error("instruction " + std::to_string(i) +
                               ": condition must reference an earlier measure");
      }
    } else if (is_conditional(ins.opcode)) {
      throw std::logic_error("instruction " + std::to_string(i) + ": missing condition");
    }
  }
}

std::uint32_t ProgramBuilder::append(PhysicalInstruction instr, bool force_serial) {
  auto index = static_cast<std::uint32_t>(program_.instructions.size());
  bool serial = force_serial || index == 0;
  if (!serial) {
    for (auto node : instr.targets) {
      if (window_nodes_.count(node)) {
        serial = true;
        break;
      }
    }
  }
  if (!serial && instr.condition && window_instrs_.count(*instr.condition)) serial = true;

  if (serial) {
    instr.tag = SeqTag::Serial;
    window_nodes_.clear();
    window_instrs_.clear();
  } else {
    instr.tag = instr.same_operation(program_.instructions.back()) ? SeqTag::Parallel
                                                                   : SeqTag::Pipelined;
  }
  window_nodes_.insert(instr.targets.begin(), instr.targets.end());
  window_instrs_.insert(index);
  program_.instructions.push_back(std::move(instr));
  return index;
}

bool ProgramBuilder::overlaps_window(const std::vector<std::uint64_t>& nodes) const {
  for (auto node : nodes) {
    if (window_nodes_.count(node)) return true;
  }
  return false;
}

PhysicalProgram ProgramBuilder::take() {
  window_nodes_.clear();
  window_instrs_.clear();
  return std::move(program_);
}

std::string dump_program(const PhysicalProgram& program) {
  std::ostringstream out;
  for (std::size_t i = 0; i < program.instructions.size(); ++i) {
    const auto& ins = program.instructions[i];
    out << i << " | " << physical_opcode_name(ins.opcode) << " | ";
    for (std::size_t p = 0; p < ins.params.size(); ++p) {
      if (p) out << ' ';
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.6g", ins.params[p]);
      out << buf;
    }
    if (ins.params.empty()) out << '-';
    out << " | ";
    for (std::size_t t = 0; t < ins.targets.size(); ++t) {
      if (t) out << ' ';
      out << ins.targets[t];
    }
    if (ins.condition) out << " if " << *ins.condition;
    out << " | " << seq_tag_name(ins.tag) << " | ";
    if (ins.group) {
      out << 'g' << *ins.group;
    } else {
      out << '-';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace parqc
