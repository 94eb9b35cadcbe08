// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "parqc/decompose.hpp"

using namespace parqc;

namespace {

constexpr double kPi = std::numbers::pi;

PhysicalInstruction rot(PhysicalOpcode op, double angle, std::uint64_t node) {
  return {op, {angle}, {node}, std::nullopt, SeqTag::Serial, std::nullopt};
}

std::string tags_of(const PhysicalProgram& p) {
  std::string out;
  for (const auto& i : p.instructions) {
    out += i.tag == SeqTag::Serial ? 'S' : i.tag == SeqTag::Pipelined ? 'P' : '=';
  }
  return out;
}

LogicalCircuit stream_of(std::uint32_t n, std::vector<LogicalInstruction> gates) {
  LogicalCircuit c;
  c.num_qubits = n;
  c.instructions = std::move(gates);
  return c;
}

}  // namespace

TEST_CASE("builder tags by window overlap and repetition") {
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));            // first is Serial
  b.append(rot(PhysicalOpcode::PRx, 1.0, 1));            // disjoint, identical
  b.append(rot(PhysicalOpcode::PRy, 1.0, 2));            // disjoint, different
  b.append(rot(PhysicalOpcode::PRy, 1.0, 0));            // node 0 still in window
  b.append(rot(PhysicalOpcode::PRy, 1.0, 3));            // window reset to {0}
  CHECK(tags_of(b.program()) == "S=PS=");
}

TEST_CASE("builder window accumulates until a barrier") {
  // The third instruction reaches back to the first's node: the window
  // remembers it even though the direct predecessor is disjoint.
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRz, 1.0, 2));
  b.append(rot(PhysicalOpcode::PRz, 2.0, 4));
  b.append(rot(PhysicalOpcode::PRx, 3.0, 2));
  CHECK(tags_of(b.program()) == "SPS");
}

TEST_CASE("builder serializes on conditions inside the window") {
  ProgramBuilder b;
  auto m = b.append({PhysicalOpcode::Measure, {}, {0}, std::nullopt, SeqTag::Serial, {}});
  b.append({PhysicalOpcode::CondPRx, {kPi}, {1}, m, SeqTag::Serial, {}});
  CHECK(tags_of(b.program()) == "SS");

  // After a barrier the measurement is settled; a condition on it no
  // longer forces serial execution.
  ProgramBuilder b2;
  auto m2 = b2.append({PhysicalOpcode::Measure, {}, {0}, std::nullopt, SeqTag::Serial, {}});
  b2.append(rot(PhysicalOpcode::PRx, 1.0, 0));  // same node, Serial barrier
  b2.append({PhysicalOpcode::CondPRx, {kPi}, {1}, m2, SeqTag::Serial, {}});
  CHECK(tags_of(b2.program()) == "SSP");
}

TEST_CASE("builder honors forced serialization") {
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b.append(rot(PhysicalOpcode::PRx, 1.0, 1), true);
  CHECK(tags_of(b.program()) == "SS");
}

TEST_CASE("standard template structure and checks") {
  auto t = CxTemplate::standard();
  CHECK_NOTHROW(t.validate());
  REQUIRE(t.rows.size() == 9);
  CHECK(t.rows[0].opcode == PhysicalOpcode::Entangle);
  CHECK(t.rows[4].condition_row == 3);
  CHECK(t.rows[8].condition_row == 7);
  REQUIRE(t.mergeable_row().has_value());
  CHECK(*t.mergeable_row() == 6);

  auto bad = t;
  bad.rows[4].condition_row = 5;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = t;
  bad.rows[1].angle.reset();
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  bad = t;
  bad.rows[0].role = TemplateRole::Control;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("template files parse to the standard rows") {
  auto t = parse_cx_template(
      "# teleported cx\n"
      "entangle both\n"
      "crx control pi/2\n"
      "pry control -pi/2\n"
      "measure control\n"
      "cond_prx target pi cond=3\n"
      "crx target pi/2\n"
      "pry target pi/2 mergeable\n"
      "measure target\n"
      "cond_prz control pi cond=7\n");
  auto std_t = CxTemplate::standard();
  REQUIRE(t.rows.size() == std_t.rows.size());
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    CAPTURE(i);
    CHECK(t.rows[i].opcode == std_t.rows[i].opcode);
    CHECK(t.rows[i].role == std_t.rows[i].role);
    CHECK(t.rows[i].condition_row == std_t.rows[i].condition_row);
    CHECK(t.rows[i].mergeable == std_t.rows[i].mergeable);
    if (std_t.rows[i].angle) {
      CHECK(*t.rows[i].angle == doctest::Approx(*std_t.rows[i].angle));
    }
  }
  CHECK_THROWS_AS(parse_cx_template("prx sideways pi\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cx_template("warp control pi\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_cx_template("cond_prx target pi\n"), std::invalid_argument);
}

TEST_CASE("gate relations") {
  auto rx0 = make_gate(GateKind::Rx, {0}, {1.0});
  auto rx1 = make_gate(GateKind::Rx, {1}, {1.0});
  auto ry2 = make_gate(GateKind::Ry, {2}, {1.0});
  auto cx01 = make_gate(GateKind::Cx, {0, 1});
  CHECK(gate_relation(rx0, rx1) == GateRelation::Parallel);
  CHECK(gate_relation(rx0, ry2) == GateRelation::Pipelined);
  CHECK(gate_relation(rx0, cx01) == GateRelation::Serial);
  CHECK(gate_relation(cx01, ry2) == GateRelation::Pipelined);
}

TEST_CASE("parallel run detection breaks on qubit reuse") {
  auto s = stream_of(4, {
                            make_gate(GateKind::Rx, {0}, {1.0}),
                            make_gate(GateKind::Rx, {1}, {1.0}),
                            make_gate(GateKind::Rx, {0}, {1.0}),
                        });
  CHECK(parallel_run_length(s.instructions, 0) == 2);
  CHECK(parallel_run_length(s.instructions, 2) == 1);
}

TEST_CASE("naive rotation lowering per mode") {
  QubitMap semi{DistributionMode::Semi, 2};
  QubitMap fully{DistributionMode::Fully, 2};
  auto tmpl = CxTemplate::standard();

  auto s = stream_of(2, {make_gate(GateKind::Rx, {1}, {1.0})});
  auto p = naive_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 2);
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{2});
  CHECK(p.instructions[1].targets == std::vector<std::uint64_t>{2});
  CHECK(tags_of(p) == "SS");  // both slots on one node

  p = naive_decompose(s, fully, tmpl);
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{4});
  CHECK(p.instructions[1].targets == std::vector<std::uint64_t>{5});
  CHECK(tags_of(p) == "S=");

  // Rz drives slots zero and two, which sit on different nodes even in
  // Semi mode.
  auto z = stream_of(2, {make_gate(GateKind::Rz, {1}, {1.0})});
  p = naive_decompose(z, semi, tmpl);
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{2});
  CHECK(p.instructions[1].targets == std::vector<std::uint64_t>{3});
  CHECK(tags_of(p) == "S=");
}

TEST_CASE("naive cx in semi mode serializes pairs and pipelines across") {
  QubitMap semi{DistributionMode::Semi, 2};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(2, {make_gate(GateKind::Cx, {0, 1})});
  auto p = naive_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 36);
  CHECK_NOTHROW(p.validate());

  // First pair instance on nodes 0 and 2, third on 1 and 3.
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{0, 2});
  CHECK(p.instructions[18].targets == std::vector<std::uint64_t>{1, 3});

  auto tags = tags_of(p);
  // Instances one and two share nodes: fully serial. Instance three
  // opens on fresh nodes and pipelines its entangle.
  CHECK(tags.substr(0, 18) == "SSSSSSSSSSSSSSSSSS");
  CHECK(tags[18] == 'P');
  // Conditions resolve inside each instance.
  CHECK(p.instructions[4].condition == 3);
  CHECK(p.instructions[8].condition == 7);
  CHECK(p.instructions[22].condition == 21);
}

TEST_CASE("naive cx in fully mode runs positions across all four pairs") {
  QubitMap fully{DistributionMode::Fully, 2};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(2, {make_gate(GateKind::Cx, {0, 1})});
  auto p = naive_decompose(s, fully, tmpl);
  REQUIRE(p.size() == 36);
  CHECK_NOTHROW(p.validate());

  // Position zero: four entangles over disjoint node pairs.
  for (int k = 0; k < 4; ++k) {
    CHECK(p.instructions[k].opcode == PhysicalOpcode::Entangle);
    CHECK(p.instructions[k].targets ==
          std::vector<std::uint64_t>{static_cast<std::uint64_t>(k),
                                     static_cast<std::uint64_t>(4 + k)});
  }
  auto tags = tags_of(p);
  CHECK(tags.substr(0, 4) == "S===");
  CHECK(tags.substr(4, 4) == "S===");
  // Conditions point at the matching pair's measure.
  CHECK(p.instructions[16].condition == 12);  // first pair's correction
  CHECK(p.instructions[17].condition == 13);
}

TEST_CASE("optimized lowering of a parallel rotation run in semi mode") {
  QubitMap semi{DistributionMode::Semi, 4};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(4, {make_gate(GateKind::Rx, {0}, {1.0}),
                         make_gate(GateKind::Rx, {1}, {1.0})});
  auto p = optimized_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 4);
  // Slot zero of both gates, then slot one of both gates.
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{0});
  CHECK(p.instructions[1].targets == std::vector<std::uint64_t>{2});
  CHECK(p.instructions[2].targets == std::vector<std::uint64_t>{0});
  CHECK(p.instructions[3].targets == std::vector<std::uint64_t>{2});
  CHECK(tags_of(p) == "S=S=");

  // The naive order serializes each gate's two slots instead.
  auto n = naive_decompose(s, semi, tmpl);
  CHECK(tags_of(n) == "SS=S");
}

TEST_CASE("optimized lowering interleaves pipelined rotation runs") {
  QubitMap semi{DistributionMode::Semi, 4};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(4, {make_gate(GateKind::Rx, {0}, {1.0}),
                         make_gate(GateKind::Ry, {1}, {1.0})});
  auto p = optimized_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 4);
  CHECK(p.instructions[0].opcode == PhysicalOpcode::PRx);
  CHECK(p.instructions[1].opcode == PhysicalOpcode::PRy);
  CHECK(p.instructions[2].opcode == PhysicalOpcode::PRx);
  CHECK(p.instructions[3].opcode == PhysicalOpcode::PRy);
  CHECK(tags_of(p) == "SPSP");
}

TEST_CASE("optimized cx run interleaves template positions") {
  QubitMap semi{DistributionMode::Semi, 4};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(4, {make_gate(GateKind::Cx, {0, 1}),
                         make_gate(GateKind::Cx, {2, 3})});
  auto p = optimized_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 72);
  CHECK_NOTHROW(p.validate());

  // Phase one: pairs (0,2) and (1,3) of both gates, entangles first.
  for (int j = 0; j < 4; ++j) CHECK(p.instructions[j].opcode == PhysicalOpcode::Entangle);
  CHECK(tags_of(p).substr(0, 4) == "S===");
  // Each position of four identical operations follows as one run.
  CHECK(tags_of(p).substr(4, 4) == "S===");

  // Phase two starts after nine positions of four.
  CHECK(p.instructions[36].opcode == PhysicalOpcode::Entangle);
  CHECK(tags_of(p)[36] == 'S');

  // Conditional rows wait for their own pair's measure but pipeline
  // against the neighbours.
  auto cond_run = tags_of(p);
  CHECK(cond_run.substr(16, 4) == "S===");
}

TEST_CASE("optimized singleton cx pulls a pipelined rotation inside") {
  QubitMap semi{DistributionMode::Semi, 3};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(3, {make_gate(GateKind::Cx, {0, 1}),
                         make_gate(GateKind::Rx, {2}, {1.0})});
  auto p = optimized_decompose(s, semi, tmpl);
  REQUIRE(p.size() == 38);
  CHECK_NOTHROW(p.validate());

  // The rotation lands right after the mergeable row of the second
  // phase, i.e. after position six of the last two instances.
  std::size_t merge_at = 18 + 2 * 7;  // phase one + positions up to mergeable
  CHECK(p.instructions[merge_at].opcode == PhysicalOpcode::PRx);
  CHECK(p.instructions[merge_at].targets == std::vector<std::uint64_t>{4});
  CHECK(p.instructions[merge_at + 1].opcode == PhysicalOpcode::PRx);
  CHECK(p.instructions[merge_at].tag == SeqTag::Pipelined);
  CHECK(p.instructions[merge_at + 1].tag == SeqTag::Serial);
}

TEST_CASE("optimized keeps serial streams identical to naive") {
  QubitMap semi{DistributionMode::Semi, 3};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(3, {make_gate(GateKind::Rx, {0}, {1.0}),
                         make_gate(GateKind::Rx, {0}, {2.0}),
                         make_gate(GateKind::Cx, {0, 1}),
                         make_gate(GateKind::Cx, {1, 2})});
  auto a = naive_decompose(s, semi, tmpl);
  auto b = optimized_decompose(s, semi, tmpl);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.instructions[i].opcode == b.instructions[i].opcode);
    CHECK(a.instructions[i].targets == b.instructions[i].targets);
    CHECK(a.instructions[i].tag == b.instructions[i].tag);
  }
}

TEST_CASE("subnet aware reordering sorts runs by subnet pressure") {
  // Four parallel rotations over logical qubits whose first nodes land in
  // subnets 1, 0, 1, 0. Sorting by occupancy then id puts subnet 0's
  // gates first only on a tie break; both subnets hold two gates, so
  // subnet 0 wins by id.
  QubitMap semi{DistributionMode::Semi, 4};
  AddressingMode mode{DistributionMode::Semi, EncodingScheme::SubBitNcBit, 2, 4, 16};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(4, {make_gate(GateKind::Rx, {2}, {1.0}),
                         make_gate(GateKind::Rx, {0}, {1.0}),
                         make_gate(GateKind::Rx, {3}, {1.0}),
                         make_gate(GateKind::Rx, {1}, {1.0})});
  auto p = subbit_ncbit_decompose(s, semi, tmpl, mode);
  REQUIRE(p.size() == 8);
  // Slot zero run: logical 0, 1 (subnet 0), then 2, 3 (subnet 1).
  CHECK(p.instructions[0].targets == std::vector<std::uint64_t>{0});
  CHECK(p.instructions[1].targets == std::vector<std::uint64_t>{2});
  CHECK(p.instructions[2].targets == std::vector<std::uint64_t>{4});
  CHECK(p.instructions[3].targets == std::vector<std::uint64_t>{6});

  AddressingMode wrong = mode;
  wrong.scheme = EncodingScheme::SubIdNcBit;
  CHECK_THROWS_AS(subbit_ncbit_decompose(s, semi, tmpl, wrong), std::invalid_argument);
}

TEST_CASE("lowering rejects non basis streams") {
  QubitMap semi{DistributionMode::Semi, 1};
  auto tmpl = CxTemplate::standard();
  auto s = stream_of(1, {make_gate(GateKind::H, {0})});
  CHECK_THROWS_AS(naive_decompose(s, semi, tmpl), std::invalid_argument);
}
