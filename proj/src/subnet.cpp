// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/subnet.hpp"

#include <set>
#include <stdexcept>

namespace parqc {

namespace {

bool rectangle_addressable(const std::vector<std::uint64_t>& nodes, const AddressingMode& mode) {
  std::set<std::uint64_t> subnets;
  std::set<std::uint64_t> offsets;
  std::set<std::pair<std::uint64_t, std::uint64_t>> pairs;
  for (auto n : nodes) {
    subnets.insert(mode.subnet_of_node(n));
    offsets.insert(mode.nc_offset_of_node(n));
    pairs.insert({mode.subnet_of_node(n), mode.nc_offset_of_node(n)});
  }
  // A subnet bitmap and a controller bitmap select the full cross product,
  // so the set must fill its bounding rectangle exactly.
  return pairs.size() == subnets.size() * offsets.size() && pairs.size() == nodes.size();
}

}  // namespace

bool nodes_coaddressable(const std::vector<std::uint64_t>& nodes, const AddressingMode& mode) {
  if (nodes.empty()) return false;
  std::set<std::uint64_t> unique(nodes.begin(), nodes.end());
  if (unique.size() != nodes.size()) return false;
  for (auto n : nodes) {
    if (n >= mode.node_count()) return false;
  }
  switch (mode.scheme) {
    case EncodingScheme::Sisd:
      return nodes.size() == 1;
    case EncodingScheme::SubIdNcBit: {
      auto subnet = mode.subnet_of_node(nodes.front());
      for (auto n : nodes) {
        if (mode.subnet_of_node(n) != subnet) return false;
      }
      return nodes.size() <= mode.ncs_per_subnet;
    }
    case EncodingScheme::SubBitNcId: {
      auto offset = mode.nc_offset_of_node(nodes.front());
      for (auto n : nodes) {
        if (mode.nc_offset_of_node(n) != offset) return false;
      }
      return nodes.size() <= mode.num_subnets;
    }
    case EncodingScheme::SubBitNcBit:
      return rectangle_addressable(nodes, mode);
  }
  return false;
}

std::size_t mark_groups(PhysicalProgram& program, const AddressingMode& mode) {
  mode.validate();
  auto& ins = program.instructions;
  std::size_t group_count = 0;
  std::uint32_t next_id = 0;

  std::size_t i = 0;
  while (i < ins.size()) {
    if (ins[i].tag != SeqTag::Parallel) {
      ++i;
      continue;
    }
    // Maximal parallel run plus the instruction it chains from.
    std::size_t run_begin = i - 1;  // instruction 0 is always Serial
    std::size_t run_end = i;
    while (run_end + 1 < ins.size() && ins[run_end + 1].tag == SeqTag::Parallel) ++run_end;

    if (mode.scheme == EncodingScheme::Sisd) {
      for (std::size_t j = run_begin; j <= run_end; ++j) {
        if (ins[j].tag == SeqTag::Parallel) ins[j].tag = SeqTag::Pipelined;
      }
      i = run_end + 1;
      continue;
    }

    std::size_t member_begin = run_begin;
    std::vector<std::uint64_t> nodes(ins[run_begin].targets.begin(),
                                     ins[run_begin].targets.end());
    auto close = [&](std::size_t member_end) {
      if (member_end - member_begin >= 2) {
        for (std::size_t j = member_begin; j < member_end; ++j) ins[j].group = next_id;
        ++next_id;
        ++group_count;
      } else if (ins[member_begin].tag == SeqTag::Parallel) {
        ins[member_begin].tag = SeqTag::Pipelined;
      }
    };
    for (std::size_t j = run_begin + 1; j <= run_end; ++j) {
      auto joined = nodes;
      joined.insert(joined.end(), ins[j].targets.begin(), ins[j].targets.end());
      if (ins[j].same_operation(ins[member_begin]) && nodes_coaddressable(joined, mode)) {
        nodes = std::move(joined);
      } else {
        close(j);
        member_begin = j;
        nodes.assign(ins[j].targets.begin(), ins[j].targets.end());
      }
    }
    close(run_end + 1);
    i = run_end + 1;
  }
  return group_count;
}

std::size_t validate_groups(const PhysicalProgram& program, const AddressingMode& mode) {
  const auto& ins = program.instructions;
  std::set<std::uint32_t> seen;
  std::size_t count = 0;
  auto bail = [](std::size_t index, const std::string& what) {
    throw std::logic_error("group check at instruction " + std::to_string(index) + ": " + what);
  };
  for (std::size_t i = 0; i < ins.size(); ++i) {
    if (!ins[i].group) continue;
    std::uint32_t id = *ins[i].group;
    if (seen.count(id)) bail(i, "group id reappears after a gap");
    if (mode.scheme == EncodingScheme::Sisd) bail(i, "group under sisd");
    std::size_t end = i;
    std::vector<std::uint64_t> nodes;
    while (end < ins.size() && ins[end].group && *ins[end].group == id) {
      if (!ins[end].same_operation(ins[i])) bail(end, "mixed operations");
      nodes.insert(nodes.end(), ins[end].targets.begin(), ins[end].targets.end());
      ++end;
    }
    if (end - i < 2) bail(i, "group of one");
    if (!nodes_coaddressable(nodes, mode)) bail(i, "members not addressable together");
    if (nodes.size() > mode.rho()) bail(i, "wider than the encoding's fan out");
    seen.insert(id);
    ++count;
    i = end - 1;
  }
  return count;
}

}  // namespace parqc
