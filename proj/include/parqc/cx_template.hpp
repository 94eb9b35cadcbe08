// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "parqc/physical.hpp"

namespace parqc {

// Which of the two nodes of an entangled pair a template row drives.
enum class TemplateRole { Control, Target, Both };

struct CxTemplateRow {
  PhysicalOpcode opcode;
  TemplateRole role = TemplateRole::Control;
  std::optional<double> angle;
  // For conditional rows: index of the measure row whose outcome gates
  // this rotation.
  std::optional<std::uint32_t> condition_row;
  // Marks the rotation that a later single qubit gate on the same logical
  // qubit may be fused behind when streams are interleaved.
  bool mergeable = false;
};

// Instruction sequence teleporting one CX between a control and a target
// data qubit that sit on different nodes. Instantiated once per data qubit
// pair of a logical CX.
struct CxTemplate {
  std::vector<CxTemplateRow> rows;

  void validate() const;
  std::optional<std::size_t> mergeable_row() const;  // last one wins

  // Built in sequence: remote entangling pulse, local pre rotation and
  // measurement on the control side, conditioned correction plus the
  // mirrored sequence on the target side, closing correction on control.
  static CxTemplate standard();
};

// Parses a template description, one row per line:
//   <opcode> <control|target|both> [angle] [cond=<row>] [mergeable]
// Angles accept plain numbers and pi fractions such as pi/2 or -pi/4.
// '#' starts a comment. Throws std::invalid_argument on malformed input.
CxTemplate parse_cx_template(const std::string& text);

}  // namespace parqc
