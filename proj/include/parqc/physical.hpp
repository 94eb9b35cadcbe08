// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace parqc {

// Node level operations. Rotations carry one angle, the entangling pulse
// links two nodes through their ancillas, and conditional rotations apply
// only when an earlier measurement came out one.
enum class PhysicalOpcode {
  PRx,
  PRy,
  PRz,
  CRx,
  Entangle,
  Measure,
  CondPRx,
  CondPRy,
  CondPRz,
};

const char* physical_opcode_name(PhysicalOpcode op);
std::optional<PhysicalOpcode> physical_opcode_from_name(std::string_view name);
bool is_conditional(PhysicalOpcode op);
bool is_rotation(PhysicalOpcode op);  // includes CRx and conditional forms

// For a conditional opcode, the base rotation it wraps.
PhysicalOpcode conditional_base(PhysicalOpcode op);

// How one instruction relates to the stream before it.
//   Serial:    must wait for the previous instruction to finish executing.
//   Pipelined: may issue while earlier instructions still execute.
//   Parallel:  pipelined and identical in opcode and parameters to its
//              predecessor, the precondition for single issue grouping.
enum class SeqTag { Serial, Pipelined, Parallel };

const char* seq_tag_name(SeqTag tag);

struct PhysicalInstruction {
  PhysicalOpcode opcode;
  std::vector<double> params;         // rotation angle, empty otherwise
  std::vector<std::uint64_t> targets; // node ids, two for Entangle
  std::optional<std::uint32_t> condition;  // index of the source Measure
  SeqTag tag = SeqTag::Serial;
  std::optional<std::uint32_t> group;      // single issue group id

  bool same_operation(const PhysicalInstruction& other) const;
};

struct PhysicalProgram {
  std::vector<PhysicalInstruction> instructions;

  std::size_t size() const { return instructions.size(); }
  void validate() const;  // target/condition sanity, throws on violation
};

// Appends instructions while deriving their tags. The builder tracks the
// set of nodes touched since the last serial barrier; an instruction that
// shares a node with that window, or that is conditioned on a measurement
// inside it, must wait and is tagged Serial (which resets the window).
// Anything else pipelines, and additionally counts as Parallel when it
// repeats the previous instruction's opcode and parameters exactly.
class ProgramBuilder {
 public:
  // force_serial stamps a Serial tag regardless of node overlap. Emitters
  // use it where an ordering constraint is not visible in the operands.
  std::uint32_t append(PhysicalInstruction instr, bool force_serial = false);

  // True when any of the nodes is still in flight, i.e. appending an
  // instruction on them now would tag it Serial. Lets emitters defer a
  // conflicting instruction while a conflict free one keeps the pipeline
  // busy.
  bool overlaps_window(const std::vector<std::uint64_t>& nodes) const;

  const PhysicalProgram& program() const { return program_; }
  PhysicalProgram take();

 private:
  PhysicalProgram program_;
  std::unordered_set<std::uint64_t> window_nodes_;
  std::unordered_set<std::uint32_t> window_instrs_;
};

std::string dump_program(const PhysicalProgram& program);

}  // namespace parqc
