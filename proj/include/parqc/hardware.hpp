// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "parqc/circuit.hpp"

namespace parqc {

// How the data qubits of one logical qubit spread over network nodes.
// Semi keeps two data qubits per node, Fully gives each its own node.
enum class DistributionMode { Semi, Fully };

// Instruction address encodings for a two level network of `num_subnets`
// subnets times `ncs_per_subnet` node controllers. Id fields name a single
// unit in log2 bits, bitmap fields select any subset in one bit per unit.
enum class EncodingScheme {
  Sisd,         // subnet id + controller id, one target per instruction
  SubIdNcBit,   // subnet id + controller bitmap
  SubBitNcId,   // subnet bitmap + controller id
  SubBitNcBit,  // subnet bitmap + controller bitmap
};

const char* distribution_name(DistributionMode mode);
const char* scheme_name(EncodingScheme scheme);
std::optional<DistributionMode> distribution_from_name(std::string_view name);
std::optional<EncodingScheme> scheme_from_name(std::string_view name);

struct AddressWidths {
  std::uint32_t subnet;
  std::uint32_t nc;
  std::uint32_t total() const { return subnet + nc; }
};

// Words beyond the first needed to push `address_bits` through an interface
// of `interface_width` bits, i.e. ceil(address_bits / interface_width) - 1.
std::uint32_t extra_address_words(std::uint32_t address_bits, std::uint32_t interface_width);

// One concrete hardware configuration: distribution mode, encoding scheme
// and network shape. M = num_subnets, K = ncs_per_subnet, N = M * K nodes.
struct AddressingMode {
  DistributionMode dist = DistributionMode::Semi;
  EncodingScheme scheme = EncodingScheme::Sisd;
  std::uint64_t num_subnets = 1;
  std::uint64_t ncs_per_subnet = 1;
  std::uint32_t interface_width = 16;

  std::uint64_t node_count() const { return num_subnets * ncs_per_subnet; }

  // Throws std::invalid_argument when the shape is not a valid power of two
  // layout or the scheme degenerates (a bitmap axis needs at least two
  // units to address anything in parallel).
  void validate() const;

  AddressWidths address_widths() const;

  // Largest number of node controllers one instruction can address.
  std::uint64_t rho() const;

  // Extra issue cycles per instruction spent streaming address words.
  // Sisd addresses always fit the first word, so this is zero there.
  std::uint32_t delta() const;

  // Node layout. Id+bitmap and bitmap+bitmap schemes place consecutive
  // nodes in the same subnet; the bitmap+id scheme interleaves so that
  // consecutive nodes land in consecutive subnets at one controller slot.
  std::uint64_t subnet_of_node(std::uint64_t node) const;
  std::uint64_t nc_offset_of_node(std::uint64_t node) const;

  std::string describe() const;
};

// Placement of a logical circuit onto nodes. Logical qubit q owns the four
// data qubits 4q .. 4q+3; Semi packs them pairwise onto nodes 2q and 2q+1,
// Fully spreads them over nodes 4q .. 4q+3. Every node also holds one
// ancilla used by the entangling sequence.
struct QubitMap {
  DistributionMode dist = DistributionMode::Semi;
  std::uint32_t num_logical = 0;

  std::uint64_t data_qubit(std::uint32_t logical, std::uint32_t slot) const {
    return std::uint64_t{4} * logical + slot;
  }
  std::uint64_t node_of_data(std::uint64_t data) const {
    return dist == DistributionMode::Semi ? data / 2 : data;
  }
  std::uint64_t node_count() const {
    return (dist == DistributionMode::Semi ? 2ull : 4ull) * num_logical;
  }
};

QubitMap map_logical(const LogicalCircuit& circuit, DistributionMode dist);

}  // namespace parqc
