// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numbers>

#include "parqc/decompose.hpp"
#include "parqc/event_sim.hpp"
#include "parqc/runtime.hpp"
#include "parqc/subnet.hpp"

using namespace parqc;

namespace {

constexpr double kPi = std::numbers::pi;

PhysicalInstruction rot(PhysicalOpcode op, double angle, std::uint64_t node) {
  return {op, {angle}, {node}, std::nullopt, SeqTag::Serial, std::nullopt};
}

PhysicalProgram tagged(std::vector<std::pair<PhysicalOpcode, SeqTag>> rows) {
  PhysicalProgram p;
  std::uint64_t node = 0;
  for (auto [op, tag] : rows) {
    PhysicalInstruction i;
    i.opcode = op;
    if (op != PhysicalOpcode::Entangle && op != PhysicalOpcode::Measure) i.params = {1.0};
    i.targets = {node++};
    i.tag = tag;
    p.instructions.push_back(std::move(i));
  }
  return p;
}

std::vector<std::tuple<SegmentKind, std::uint32_t, std::uint32_t>> segments_of(
    const PhysicalProgram& p) {
  std::vector<std::tuple<SegmentKind, std::uint32_t, std::uint32_t>> out;
  for (const auto& s : segment_program(p)) out.emplace_back(s.kind, s.first, s.last);
  return out;
}

}  // namespace

TEST_CASE("segmentation claims chain heads and splits on tag changes") {
  using K = SegmentKind;
  using Row = std::pair<PhysicalOpcode, SeqTag>;
  auto prx = PhysicalOpcode::PRx;

  CHECK(segments_of(tagged({})).empty());
  CHECK(segments_of(tagged({Row{prx, SeqTag::Serial}})) ==
        std::vector<std::tuple<K, std::uint32_t, std::uint32_t>>{{K::Serial, 0, 0}});

  // A parallel stretch adopts the instruction it chains from as its head.
  CHECK(segments_of(tagged({Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Parallel},
                            Row{prx, SeqTag::Serial}})) ==
        std::vector<std::tuple<K, std::uint32_t, std::uint32_t>>{
            {K::Serial, 0, 0}, {K::Parallel, 1, 2}, {K::Serial, 3, 3}});

  CHECK(segments_of(tagged({Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Pipelined},
                            Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Pipelined}})) ==
        std::vector<std::tuple<K, std::uint32_t, std::uint32_t>>{
            {K::Pipelined, 0, 1}, {K::Pipelined, 2, 3}});

  CHECK(segments_of(tagged({Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Parallel},
                            Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Parallel}})) ==
        std::vector<std::tuple<K, std::uint32_t, std::uint32_t>>{
            {K::Parallel, 0, 1}, {K::Parallel, 2, 3}});

  CHECK(segments_of(tagged({Row{prx, SeqTag::Serial},
                            Row{prx, SeqTag::Pipelined},
                            Row{prx, SeqTag::Pipelined},
                            Row{prx, SeqTag::Serial}})) ==
        std::vector<std::tuple<K, std::uint32_t, std::uint32_t>>{
            {K::Pipelined, 0, 2}, {K::Serial, 3, 3}});
}

TEST_CASE("segments tile lowered programs without gaps") {
  QubitMap semi{DistributionMode::Semi, 3};
  auto tmpl = CxTemplate::standard();
  LogicalCircuit c;
  c.num_qubits = 3;
  c.instructions = {make_gate(GateKind::Rx, {0}, {kPi / 4}),
                    make_gate(GateKind::Rx, {1}, {kPi / 4}),
                    make_gate(GateKind::Cx, {0, 1}),
                    make_gate(GateKind::Rz, {2}, {kPi / 5})};
  for (auto p : {naive_decompose(c, semi, tmpl), optimized_decompose(c, semi, tmpl)}) {
    auto segs = segment_program(p);
    REQUIRE_FALSE(segs.empty());
    std::uint32_t expect = 0;
    for (const auto& s : segs) {
      CHECK(s.first == expect);
      CHECK(s.last >= s.first);
      expect = s.last + 1;
    }
    CHECK(expect == p.size());
  }
}

TEST_CASE("a serial pair bills full issue and execution per instruction") {
  auto t = TimingModel::standard();
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  auto p = b.take();
  CHECK(runtime_default(p, t) == 134);
  CHECK(billed_cycles(p, t, 2, false) == 138);
  CHECK(event_sim_cycles(p, t, 0, false) == 134);
  CHECK(event_sim_cycles(p, t, 2, false) == 138);
}

TEST_CASE("a pipelined pair exposes only the last execution") {
  auto t = TimingModel::standard();
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b.append(rot(PhysicalOpcode::PRy, 1.0, 1));
  auto p = b.take();
  CHECK(runtime_default(p, t) == 72);
  CHECK(billed_cycles(p, t, 1, false) == 74);
  CHECK(event_sim_cycles(p, t, 0, false) == 72);
  CHECK(event_sim_cycles(p, t, 1, false) == 74);
}

TEST_CASE("grouped rotations share one issue slot") {
  auto t = TimingModel::standard();
  ProgramBuilder b;
  for (std::uint64_t n = 0; n < 4; ++n) b.append(rot(PhysicalOpcode::PRx, 1.0, n));
  auto p = b.take();
  // Ungrouped, every instruction pays its own issue slot.
  CHECK(runtime_default(p, t) == 4 * 5 + 62);

  AddressingMode narrow{DistributionMode::Semi, EncodingScheme::SubIdNcBit, 2, 2, 16};
  CHECK(mark_groups(p, narrow) == 2);
  CHECK(runtime_parallel(p, t, narrow) == 2 * 5 + 62);
  CHECK(event_sim_cycles(p, t, narrow.delta(), true) == 72);

  // A wider controller bitmap swallows the whole run in one slot, but its
  // three word address costs two extra cycles on a sixteen bit interface.
  ProgramBuilder b2;
  for (std::uint64_t n = 0; n < 4; ++n) b2.append(rot(PhysicalOpcode::PRx, 1.0, n));
  auto wide_prog = b2.take();
  AddressingMode wide{DistributionMode::Semi, EncodingScheme::SubIdNcBit, 2, 32, 16};
  REQUIRE(wide.delta() == 2);
  CHECK(mark_groups(wide_prog, wide) == 1);
  CHECK(runtime_parallel(wide_prog, t, wide) == (5 + 2) + 62);
}

TEST_CASE("serial tags inside a stream flush the open chain") {
  auto t = TimingModel::standard();
  ProgramBuilder b;
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b.append(rot(PhysicalOpcode::PRy, 1.0, 1));
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  auto p = b.take();
  // Chain of two (72), then two fully serial rotations (67 each).
  CHECK(runtime_default(p, t) == 206);
  CHECK(event_sim_cycles(p, t, 0, false) == 206);

  ProgramBuilder b2;
  b2.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b2.append(rot(PhysicalOpcode::PRy, 1.0, 1));
  b2.append(rot(PhysicalOpcode::PRx, 1.0, 0));
  b2.append(rot(PhysicalOpcode::PRy, 1.0, 1));
  auto q = b2.take();
  // Two chains of two back to back.
  CHECK(runtime_default(q, t) == 144);
  CHECK(event_sim_cycles(q, t, 0, false) == 144);
}

TEST_CASE("one teleported cx instance bills the serial template total") {
  auto t = TimingModel::standard();
  // Issue cycles per template row: 3+4+5+2+5+4+5+2+3 = 33. Execution:
  // 1160+62+62+400+62+62+62+400+11 = 2281.
  QubitMap semi{DistributionMode::Semi, 2};
  auto tmpl = CxTemplate::standard();
  LogicalCircuit c;
  c.num_qubits = 2;
  c.instructions = {make_gate(GateKind::Cx, {0, 1})};

  // Semi mode shares nodes between pairs, so the instances serialize
  // except at one seam: instance three starts on the untouched node pair
  // and issues while the previous conditional rotation (11 cycles) still
  // executes.
  auto p = naive_decompose(c, semi, tmpl);
  CHECK(runtime_default(p, t) == 4 * 2314 - 11);
  CHECK(event_sim_cycles(p, t, 0, false) == 4 * 2314 - 11);

  // Fully mode runs each template position across the four pairs, so each
  // position pays four issues and one execution.
  QubitMap fully{DistributionMode::Fully, 2};
  auto q = naive_decompose(c, fully, tmpl);
  CHECK(runtime_default(q, t) == 4 * 33 + 2281);
}

TEST_CASE("single target encoding reduces to the plain pipeline") {
  auto t = TimingModel::standard();
  QubitMap semi{DistributionMode::Semi, 2};
  auto tmpl = CxTemplate::standard();
  LogicalCircuit c;
  c.num_qubits = 2;
  c.instructions = {make_gate(GateKind::Rx, {0}, {kPi / 4}),
                    make_gate(GateKind::Rz, {1}, {kPi / 5}),
                    make_gate(GateKind::Cx, {0, 1})};
  AddressingMode sisd{DistributionMode::Semi, EncodingScheme::Sisd, 2, 2, 16};

  for (auto p : {naive_decompose(c, semi, tmpl), optimized_decompose(c, semi, tmpl)}) {
    auto base = runtime_default(p, t);
    CHECK(mark_groups(p, sisd) == 0);
    for (const auto& i : p.instructions) {
      CHECK_FALSE(i.group.has_value());
      CHECK(i.tag != SeqTag::Parallel);
    }
    CHECK(runtime_parallel(p, t, sisd) == base);
  }
}

TEST_CASE("empty programs cost nothing") {
  auto t = TimingModel::standard();
  PhysicalProgram p;
  CHECK(runtime_default(p, t) == 0);
  CHECK(event_sim_cycles(p, t, 0, false) == 0);
  CHECK(segment_program(p).empty());
}
