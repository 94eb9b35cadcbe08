// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/schedule.hpp"

#include <algorithm>
#include <sstream>

namespace parqc {

bool gates_depend(const LogicalInstruction& a, const LogicalInstruction& b) {
  for (auto qa : a.operands) {
    for (auto qb : b.operands) {
      if (qa == qb) return true;
    }
  }
  return false;
}

namespace {

bool gate_before(const LogicalInstruction& a, const LogicalInstruction& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  for (std::size_t i = 0; i < std::min(a.params.size(), b.params.size()); ++i) {
    auto wa = angle_word(a.params[i]);
    auto wb = angle_word(b.params[i]);
    if (wa != wb) return wa < wb;
  }
  if (a.params.size() != b.params.size()) return a.params.size() < b.params.size();
  return *std::min_element(a.operands.begin(), a.operands.end()) <
         *std::min_element(b.operands.begin(), b.operands.end());
}

}  // namespace

LogicalCircuit Schedule::flatten() const {
  LogicalCircuit out;
  out.num_qubits = num_qubits;
  for (const auto& layer : layers) {
    out.instructions.insert(out.instructions.end(), layer.begin(), layer.end());
  }
  return out;
}

Schedule schedule_asap(const LogicalCircuit& circuit) {
  circuit.validate();
  Schedule s;
  s.num_qubits = circuit.num_qubits;
  std::vector<std::size_t> next_free(circuit.num_qubits, 0);
  for (const auto& g : circuit.instructions) {
    std::size_t layer = 0;
    for (auto q : g.operands) layer = std::max(layer, next_free[q]);
    if (layer >= s.layers.size()) s.layers.resize(layer + 1);
    s.layers[layer].push_back(g);
    for (auto q : g.operands) next_free[q] = layer + 1;
  }
  for (auto& layer : s.layers) std::stable_sort(layer.begin(), layer.end(), gate_before);
  return s;
}

Schedule trivial_layers(const LogicalCircuit& circuit) {
  circuit.validate();
  Schedule s;
  s.num_qubits = circuit.num_qubits;
  s.layers.reserve(circuit.instructions.size());
  for (const auto& g : circuit.instructions) s.layers.push_back({g});
  return s;
}

std::string dump_schedule(const Schedule& schedule) {
  std::ostringstream out;
  for (std::size_t i = 0; i < schedule.layers.size(); ++i) {
    out << i << ':';
    for (const auto& g : schedule.layers[i]) {
      out << ' ' << gate_name(g.kind);
      if (!g.params.empty()) {
        out << '(';
        for (std::size_t p = 0; p < g.params.size(); ++p) {
          if (p) out << ',';
          out << angle_word(g.params[p]);
        }
        out << ')';
      }
      for (auto q : g.operands) out << ' ' << 'q' << q;
      out << ';';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace parqc
