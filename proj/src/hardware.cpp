// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/hardware.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace parqc {

namespace {

bool is_pow2(std::uint64_t v) { return v != 0 && (v & (v - 1)) == 0; }

// log2 of a power of two, with a count of one taking zero bits.
std::uint32_t id_width(std::uint64_t count) {
  return static_cast<std::uint32_t>(std::bit_width(count) - 1);
}

std::uint32_t bitmap_width(std::uint64_t count) {
  return static_cast<std::uint32_t>(count);
}

}  // namespace

const char* distribution_name(DistributionMode mode) {
  return mode == DistributionMode::Semi ? "semi" : "fully";
}

const char* scheme_name(EncodingScheme scheme) {
  switch (scheme) {
    case EncodingScheme::Sisd: return "sisd";
    case EncodingScheme::SubIdNcBit: return "subid-ncbit";
    case EncodingScheme::SubBitNcId: return "subbit-ncid";
    case EncodingScheme::SubBitNcBit: return "subbit-ncbit";
  }
  return "?";
}

std::optional<DistributionMode> distribution_from_name(std::string_view name) {
  if (name == "semi") return DistributionMode::Semi;
  if (name == "fully") return DistributionMode::Fully;
  return std::nullopt;
}

std::optional<EncodingScheme> scheme_from_name(std::string_view name) {
  if (name == "sisd") return EncodingScheme::Sisd;
  if (name == "subid-ncbit") return EncodingScheme::SubIdNcBit;
  if (name == "subbit-ncid") return EncodingScheme::SubBitNcId;
  if (name == "subbit-ncbit") return EncodingScheme::SubBitNcBit;
  return std::nullopt;
}

std::uint32_t extra_address_words(std::uint32_t address_bits, std::uint32_t interface_width) {
  if (interface_width == 0) throw std::invalid_argument("interface width must be positive");
  if (address_bits == 0) return 0;
  return (address_bits + interface_width - 1) / interface_width - 1;
}

void AddressingMode::validate() const {
  if (!is_pow2(num_subnets)) throw std::invalid_argument("subnet count must be a power of two");
  if (!is_pow2(ncs_per_subnet)) {
    throw std::invalid_argument("controllers per subnet must be a power of two");
  }
  if (num_subnets > (std::uint64_t{1} << 32) || ncs_per_subnet > (std::uint64_t{1} << 32) ||
      node_count() > (std::uint64_t{1} << 32)) {
    throw std::invalid_argument("network size out of range");
  }
  if (interface_width == 0) throw std::invalid_argument("interface width must be positive");
  switch (scheme) {
    case EncodingScheme::Sisd:
      break;
    case EncodingScheme::SubIdNcBit:
    case EncodingScheme::SubBitNcBit:
      if (ncs_per_subnet < 2) {
        throw std::invalid_argument("controller bitmap needs at least two controllers per subnet");
      }
      break;
    case EncodingScheme::SubBitNcId:
      if (num_subnets < 2) {
        throw std::invalid_argument("subnet bitmap needs at least two subnets");
      }
      break;
  }
}

AddressWidths AddressingMode::address_widths() const {
  switch (scheme) {
    case EncodingScheme::Sisd:
      return {id_width(num_subnets), id_width(ncs_per_subnet)};
    case EncodingScheme::SubIdNcBit:
      return {id_width(num_subnets), bitmap_width(ncs_per_subnet)};
    case EncodingScheme::SubBitNcId:
      return {bitmap_width(num_subnets), id_width(ncs_per_subnet)};
    case EncodingScheme::SubBitNcBit:
      return {bitmap_width(num_subnets), bitmap_width(ncs_per_subnet)};
  }
  throw std::logic_error("unhandled scheme");
}

std::uint64_t AddressingMode::rho() const {
  switch (scheme) {
    case EncodingScheme::Sisd: return 1;
    case EncodingScheme::SubIdNcBit: return ncs_per_subnet;
    case EncodingScheme::SubBitNcId: return num_subnets;
    case EncodingScheme::SubBitNcBit: return node_count();
  }
  throw std::logic_error("unhandled scheme");
}

std::uint32_t AddressingMode::delta() const {
  if (scheme == EncodingScheme::Sisd) return 0;
  return extra_address_words(address_widths().total(), interface_width);
}

std::uint64_t AddressingMode::subnet_of_node(std::uint64_t node) const {
  return scheme == EncodingScheme::SubBitNcId ? node % num_subnets : node / ncs_per_subnet;
}

std::uint64_t AddressingMode::nc_offset_of_node(std::uint64_t node) const {
  return scheme == EncodingScheme::SubBitNcId ? node / num_subnets : node % ncs_per_subnet;
}

std::string AddressingMode::describe() const {
  std::ostringstream out;
  auto w = address_widths();
  out << distribution_name(dist) << '/' << scheme_name(scheme) << " M=" << num_subnets
      << " K=" << ncs_per_subnet << " W=(" << w.subnet << ',' << w.nc << ")"
      << " rho=" << rho() << " delta=" << delta();
  return out.str();
}

QubitMap map_logical(const LogicalCircuit& circuit, DistributionMode dist) {
  circuit.validate();
  return QubitMap{dist, circuit.num_qubits};
}

}  // namespace parqc
