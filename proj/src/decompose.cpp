// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/decompose.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace parqc {

GateRelation gate_relation(const LogicalInstruction& a, const LogicalInstruction& b) {
  for (auto qa : a.operands) {
    for (auto qb : b.operands) {
      if (qa == qb) return GateRelation::Serial;
    }
  }
  return params_equal(a, b) ? GateRelation::Parallel : GateRelation::Pipelined;
}

std::size_t parallel_run_length(const std::vector<LogicalInstruction>& stream,
                                std::size_t begin) {
  std::set<std::uint32_t> used(stream[begin].operands.begin(), stream[begin].operands.end());
  std::size_t end = begin + 1;
  while (end < stream.size()) {
    if (gate_relation(stream[end - 1], stream[end]) != GateRelation::Parallel) break;
    bool reuse = false;
    for (auto q : stream[end].operands) reuse = reuse || used.count(q);
    if (reuse) break;
    used.insert(stream[end].operands.begin(), stream[end].operands.end());
    ++end;
  }
  return end - begin;
}

namespace {

bool is_xy_rotation(GateKind kind) { return kind == GateKind::Rx || kind == GateKind::Ry; }

struct RotationSlots {
  PhysicalOpcode opcode;
  std::uint32_t slots[2];
};

RotationSlots rotation_slots(GateKind kind) {
  switch (kind) {
    case GateKind::Rx: return {PhysicalOpcode::PRx, {0, 1}};
    case GateKind::Ry: return {PhysicalOpcode::PRy, {0, 1}};
    case GateKind::Rz: return {PhysicalOpcode::PRz, {0, 2}};
    default: throw std::logic_error("stream contains a non basis gate");
  }
}

// One template instantiation over a control/target data qubit pair.
// Emitted instruction indices are kept per row so conditional rows can
// name the measurement they depend on.
struct CxInstance {
  std::uint64_t ctrl_node;
  std::uint64_t tgt_node;
  std::vector<std::optional<std::uint32_t>> emitted;
};

class Lowerer {
 public:
  Lowerer(const QubitMap& map, const CxTemplate& tmpl) : map_(map), tmpl_(tmpl) {
    tmpl_.validate();
  }

  PhysicalProgram naive(const LogicalCircuit& stream) {
    for (const auto& g : stream.instructions) emit_naive(g);
    return builder_.take();
  }

  PhysicalProgram optimized(const LogicalCircuit& stream) {
    const auto& gates = stream.instructions;
    std::size_t i = 0;
    while (i < gates.size()) {
      std::size_t len = parallel_run_length(gates, i);
      if (len >= 2) {
        i += emit_run(gates, i, len);
      } else {
        i += emit_single(gates, i);
      }
    }
    return builder_.take();
  }

 private:
  std::uint64_t slot_node(const LogicalInstruction& g, std::uint32_t slot) const {
    return map_.node_of_data(map_.data_qubit(g.operands[0], slot));
  }

  // True when the rotation's nodes are still in flight, so appending it now
  // would start a new serial stretch.
  bool gate_conflicts(const LogicalInstruction& g) const {
    auto spec = rotation_slots(g.kind);
    return builder_.overlaps_window(
        {slot_node(g, spec.slots[0]), slot_node(g, spec.slots[1])});
  }

  void emit_rotation_slot(const LogicalInstruction& g, int which, bool force_serial = false) {
    auto spec = rotation_slots(g.kind);
    builder_.append({spec.opcode,
                     {g.params[0]},
                     {slot_node(g, spec.slots[which])},
                     std::nullopt,
                     SeqTag::Serial,
                     std::nullopt},
                    force_serial);
  }

  std::vector<CxInstance> make_instances(const LogicalInstruction& g) const {
    std::vector<CxInstance> out;
    out.reserve(4);
    for (std::uint32_t k = 0; k < 4; ++k) {
      CxInstance inst;
      inst.ctrl_node = map_.node_of_data(map_.data_qubit(g.operands[0], k));
      inst.tgt_node = map_.node_of_data(map_.data_qubit(g.operands[1], k));
      inst.emitted.resize(tmpl_.rows.size());
      out.push_back(inst);
    }
    return out;
  }

  void emit_template_row(CxInstance& inst, std::size_t row_idx) {
    const auto& row = tmpl_.rows[row_idx];
    PhysicalInstruction ins;
    ins.opcode = row.opcode;
    if (row.angle) ins.params = {*row.angle};
    switch (row.role) {
      case TemplateRole::Control: ins.targets = {inst.ctrl_node}; break;
      case TemplateRole::Target: ins.targets = {inst.tgt_node}; break;
      case TemplateRole::Both: ins.targets = {inst.ctrl_node, inst.tgt_node}; break;
    }
    if (row.condition_row) ins.condition = inst.emitted[*row.condition_row];
    inst.emitted[row_idx] = builder_.append(std::move(ins));
  }

  // Position by position emission over a set of node disjoint instances.
  // When `merge` is set, its two node rotations follow the last phase's
  // mergeable row so their issue slots hide under the template's
  // execution tail.
  void emit_lockstep(std::vector<std::vector<CxInstance*>> phases,
                     const LogicalInstruction* merge) {
    auto merge_row = tmpl_.mergeable_row();
    for (std::size_t p = 0; p < phases.size(); ++p) {
      bool last_phase = p + 1 == phases.size();
      for (std::size_t r = 0; r < tmpl_.rows.size(); ++r) {
        for (auto* inst : phases[p]) emit_template_row(*inst, r);
        if (merge && last_phase && merge_row && r == *merge_row) {
          emit_rotation_slot(*merge, 0);
          emit_rotation_slot(*merge, 1);
        }
      }
    }
    if (merge && !merge_row) {
      emit_rotation_slot(*merge, 0);
      emit_rotation_slot(*merge, 1);
    }
  }

  // Semi mode splits the four data qubit pairs into two node disjoint
  // phases; Fully mode runs all of them in one phase.
  std::vector<std::vector<CxInstance*>> lockstep_phases(std::vector<CxInstance>& instances) {
    std::vector<std::vector<CxInstance*>> phases;
    if (map_.dist == DistributionMode::Semi) {
      phases.resize(2);
      for (std::size_t j = 0; j + 3 < instances.size(); j += 4) {
        phases[0].push_back(&instances[j + 0]);
        phases[0].push_back(&instances[j + 2]);
        phases[1].push_back(&instances[j + 1]);
        phases[1].push_back(&instances[j + 3]);
      }
    } else {
      phases.resize(1);
      for (auto& inst : instances) phases[0].push_back(&inst);
    }
    return phases;
  }

  void emit_cx_run(const std::vector<LogicalInstruction>& gates, std::size_t begin,
                   std::size_t len, const LogicalInstruction* merge) {
    std::vector<CxInstance> instances;
    instances.reserve(4 * len);
    for (std::size_t j = 0; j < len; ++j) {
      auto one = make_instances(gates[begin + j]);
      instances.insert(instances.end(), one.begin(), one.end());
    }
    emit_lockstep(lockstep_phases(instances), merge);
  }

  void emit_naive(const LogicalInstruction& g) {
    if (g.kind != GateKind::Cx) {
      emit_rotation_slot(g, 0);
      emit_rotation_slot(g, 1);
      return;
    }
    auto instances = make_instances(g);
    if (map_.dist == DistributionMode::Semi) {
      for (auto& inst : instances) {
        for (std::size_t r = 0; r < tmpl_.rows.size(); ++r) emit_template_row(inst, r);
      }
    } else {
      for (std::size_t r = 0; r < tmpl_.rows.size(); ++r) {
        for (auto& inst : instances) emit_template_row(inst, r);
      }
    }
  }

  // First slot rotations of every gate in the run, then the second slots.
  // In Semi mode both slots of a gate share a node, so the second run
  // opens behind a serial barrier that the first gate makes explicit.
  void emit_rotation_slot_runs(const std::vector<LogicalInstruction>& gates, std::size_t begin,
                               std::size_t len) {
    for (std::size_t j = 0; j < len; ++j) emit_rotation_slot(gates[begin + j], 0);
    for (std::size_t j = 0; j < len; ++j) {
      emit_rotation_slot(gates[begin + j], 1, j == 0);
    }
  }

  // Two disjoint pipelined runs A and B: A's first slots, B's first
  // slots, A's second slots, B's second slots. B's stream keeps the
  // interface busy while A waits out its own slot barrier.
  void emit_interleaved_rotation_runs(const std::vector<LogicalInstruction>& gates,
                                      std::size_t a_begin, std::size_t a_len,
                                      std::size_t b_begin, std::size_t b_len) {
    for (std::size_t j = 0; j < a_len; ++j) emit_rotation_slot(gates[a_begin + j], 0);
    for (std::size_t j = 0; j < b_len; ++j) emit_rotation_slot(gates[b_begin + j], 0);
    for (std::size_t j = 0; j < a_len; ++j) {
      emit_rotation_slot(gates[a_begin + j], 1, j == 0);
    }
    for (std::size_t j = 0; j < b_len; ++j) emit_rotation_slot(gates[b_begin + j], 1);
  }

  static bool runs_disjoint(const std::vector<LogicalInstruction>& gates, std::size_t a_begin,
                            std::size_t a_len, std::size_t b_begin, std::size_t b_len) {
    std::set<std::uint32_t> seen;
    for (std::size_t j = 0; j < a_len; ++j) {
      seen.insert(gates[a_begin + j].operands.begin(), gates[a_begin + j].operands.end());
    }
    for (std::size_t j = 0; j < b_len; ++j) {
      for (auto q : gates[b_begin + j].operands) {
        if (seen.count(q)) return false;
      }
    }
    return true;
  }

  // Run of two or more identical disjoint gates starting at `begin`.
  // Returns how many gates were consumed.
  std::size_t emit_run(const std::vector<LogicalInstruction>& gates, std::size_t begin,
                       std::size_t len) {
    const auto& head = gates[begin];
    if (map_.dist == DistributionMode::Semi && is_xy_rotation(head.kind) &&
        begin + len < gates.size() &&
        gate_relation(gates[begin + len - 1], gates[begin + len]) == GateRelation::Pipelined &&
        is_xy_rotation(gates[begin + len].kind)) {
      std::size_t follow = parallel_run_length(gates, begin + len);
      if (runs_disjoint(gates, begin, len, begin + len, follow)) {
        emit_interleaved_rotation_runs(gates, begin, len, begin + len, follow);
        return len + follow;
      }
    }
    if (head.kind == GateKind::Cx) {
      emit_cx_run(gates, begin, len, nullptr);
    } else if (map_.dist == DistributionMode::Semi && is_xy_rotation(head.kind)) {
      emit_rotation_slot_runs(gates, begin, len);
    } else {
      // Both slots already land on distinct nodes, flat emission chains.
      for (std::size_t j = 0; j < len; ++j) {
        emit_rotation_slot(gates[begin + j], 0);
        emit_rotation_slot(gates[begin + j], 1);
      }
    }
    return len;
  }

  // Lone gate at `begin`; may pull its pipelined neighbour in.
  std::size_t emit_single(const std::vector<LogicalInstruction>& gates, std::size_t begin) {
    const auto& cur = gates[begin];
    if (begin + 1 < gates.size() &&
        gate_relation(cur, gates[begin + 1]) == GateRelation::Pipelined) {
      const auto& next = gates[begin + 1];
      if (cur.kind == GateKind::Cx && is_xy_rotation(next.kind)) {
        std::vector<CxInstance> instances = make_instances(cur);
        emit_lockstep(lockstep_phases(instances), &next);
        return 2;
      }
      if (map_.dist == DistributionMode::Semi && is_xy_rotation(cur.kind) &&
          is_xy_rotation(next.kind)) {
        emit_interleaved_rotation_runs(gates, begin, 1, begin + 1, 1);
        return 2;
      }
      // Pipelined neighbours act on disjoint qubits, so they commute and
      // either may go first. When this gate's nodes are still in flight but
      // the neighbour's are free, emit the neighbour first: the issue chain
      // stays open one pair longer and the serial break lands behind the
      // neighbour instead of cutting in front of it.
      if (cur.kind != GateKind::Cx && next.kind != GateKind::Cx &&
          parallel_run_length(gates, begin + 1) < 2 && gate_conflicts(cur) &&
          !gate_conflicts(next)) {
        emit_naive(next);
        emit_naive(cur);
        return 2;
      }
    }
    emit_naive(cur);
    return 1;
  }

  const QubitMap& map_;
  CxTemplate tmpl_;
  ProgramBuilder builder_;
};

void check_stream(const LogicalCircuit& stream, const QubitMap& map) {
  stream.validate();
  if (stream.num_qubits != map.num_logical) {
    throw std::invalid_argument("stream and qubit map disagree on qubit count");
  }
  for (const auto& g : stream.instructions) {
    if (!is_basis_gate(g.kind)) {
      throw std::invalid_argument("stream contains a non basis gate; transpile first");
    }
  }
}

}  // namespace

PhysicalProgram naive_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                const CxTemplate& tmpl) {
  check_stream(stream, map);
  return Lowerer(map, tmpl).naive(stream);
}

PhysicalProgram optimized_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                    const CxTemplate& tmpl) {
  check_stream(stream, map);
  return Lowerer(map, tmpl).optimized(stream);
}

PhysicalProgram subbit_ncbit_decompose(const LogicalCircuit& stream, const QubitMap& map,
                                       const CxTemplate& tmpl, const AddressingMode& mode) {
  if (mode.scheme != EncodingScheme::SubBitNcBit) {
    throw std::invalid_argument("subnet reordering only applies to the bitmap+bitmap scheme");
  }
  mode.validate();
  check_stream(stream, map);

  LogicalCircuit reordered = stream;
  auto& gates = reordered.instructions;
  std::size_t i = 0;
  while (i < gates.size()) {
    std::size_t len = parallel_run_length(gates, i);
    if (len >= 2) {
      std::map<std::uint64_t, std::size_t> subnet_count;
      auto subnet_of = [&](const LogicalInstruction& g) {
        return mode.subnet_of_node(map.node_of_data(map.data_qubit(g.operands[0], 0)));
      };
      for (std::size_t j = 0; j < len; ++j) ++subnet_count[subnet_of(gates[i + j])];
      std::stable_sort(gates.begin() + i, gates.begin() + i + len,
                       [&](const LogicalInstruction& a, const LogicalInstruction& b) {
                         auto sa = subnet_of(a);
                         auto sb = subnet_of(b);
                         if (subnet_count[sa] != subnet_count[sb]) {
                           return subnet_count[sa] > subnet_count[sb];
                         }
                         return sa < sb;
                       });
    }
    i += len;
  }
  return Lowerer(map, tmpl).optimized(reordered);
}

}  // namespace parqc
