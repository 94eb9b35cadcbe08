// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/cx_template.hpp"

#include <numbers>
#include <sstream>
#include <stdexcept>

namespace parqc {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw std::invalid_argument("cx template line " + std::to_string(line) + ": " + what);
}

// Accepts <number>, pi, and products/quotients of those with an optional
// leading minus, e.g. "pi/2", "-pi/4", "3*pi/2", "0.25".
double parse_angle(const std::string& token, std::size_t line) {
  double value = 1.0;
  std::size_t pos = 0;
  bool negative = false;
  if (pos < token.size() && token[pos] == '-') {
    negative = true;
    ++pos;
  }
  bool divide = false;
  bool first = true;
  while (pos < token.size()) {
    double factor = 0.0;
    if (token.compare(pos, 2, "pi") == 0) {
      factor = kPi;
      pos += 2;
    } else {
      std::size_t used = 0;
      try {
        factor = std::stod(token.substr(pos), &used);
      } catch (const std::exception&) {
        fail(line, "bad angle '" + token + "'");
      }
      pos += used;
    }
    value = divide ? value / factor : (first ? factor : value * factor);
    first = false;
    if (pos == token.size()) break;
    if (token[pos] == '*') {
      divide = false;
    } else if (token[pos] == '/') {
      divide = true;
    } else {
      fail(line, "bad angle '" + token + "'");
    }
    ++pos;
  }
  if (first) fail(line, "empty angle");
  return negative ? -value : value;
}

}  // namespace

void CxTemplate::validate() const {
  if (rows.empty()) throw std::invalid_argument("cx template: no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    auto bad = [&](const std::string& what) {
      throw std::invalid_argument("cx template row " + std::to_string(i) + ": " + what);
    };
    if (row.role == TemplateRole::Both && row.opcode != PhysicalOpcode::Entangle) {
      bad("only entangle may drive both nodes");
    }
    if (row.opcode == PhysicalOpcode::Entangle && row.role != TemplateRole::Both) {
      bad("entangle must drive both nodes");
    }
    if (is_rotation(row.opcode)) {
      if (!row.angle) bad("rotation without an angle");
    } else if (row.angle) {
      bad("angle on a non rotation");
    }
    if (is_conditional(row.opcode)) {
      if (!row.condition_row) bad("conditional row without cond=");
      if (*row.condition_row >= i) bad("condition must point at an earlier row");
      if (rows[*row.condition_row].opcode != PhysicalOpcode::Measure) {
        bad("condition must point at a measure row");
      }
    } else if (row.condition_row) {
      bad("cond= on an unconditional row");
    }
    if (row.mergeable && !is_rotation(row.opcode)) bad("mergeable only applies to rotations");
  }
}

std::optional<std::size_t> CxTemplate::mergeable_row() const {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].mergeable) found = i;
  }
  return found;
}

CxTemplate CxTemplate::standard() {
  CxTemplate t;
  t.rows = {
      {PhysicalOpcode::Entangle, TemplateRole::Both, std::nullopt, std::nullopt, false},
      {PhysicalOpcode::CRx, TemplateRole::Control, kPi / 2, std::nullopt, false},
      {PhysicalOpcode::PRy, TemplateRole::Control, -kPi / 2, std::nullopt, false},
      {PhysicalOpcode::Measure, TemplateRole::Control, std::nullopt, std::nullopt, false},
      {PhysicalOpcode::CondPRx, TemplateRole::Target, kPi, 3u, false},
      {PhysicalOpcode::CRx, TemplateRole::Target, kPi / 2, std::nullopt, false},
      {PhysicalOpcode::PRy, TemplateRole::Target, kPi / 2, std::nullopt, true},
      {PhysicalOpcode::Measure, TemplateRole::Target, std::nullopt, std::nullopt, false},
      {PhysicalOpcode::CondPRz, TemplateRole::Control, kPi, 7u, false},
  };
  return t;
}

CxTemplate parse_cx_template(const std::string& text) {
  CxTemplate t;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string opcode_word;
    if (!(line >> opcode_word)) continue;

    CxTemplateRow row;
    auto op = physical_opcode_from_name(opcode_word);
    if (!op) fail(line_no, "unknown opcode '" + opcode_word + "'");
    row.opcode = *op;

    std::string role_word;
    if (!(line >> role_word)) fail(line_no, "missing role");
    if (role_word == "control") {
      row.role = TemplateRole::Control;
    } else if (role_word == "target") {
      row.role = TemplateRole::Target;
    } else if (role_word == "both") {
      row.role = TemplateRole::Both;
    } else {
      fail(line_no, "unknown role '" + role_word + "'");
    }

    std::string token;
    while (line >> token) {
      if (token == "mergeable") {
        row.mergeable = true;
      } else if (token.rfind("cond=", 0) == 0) {
        try {
          row.condition_row = static_cast<std::uint32_t>(std::stoul(token.substr(5)));
        } catch (const std::exception&) {
          fail(line_no, "bad condition '" + token + "'");
        }
      } else if (!row.angle) {
        row.angle = parse_angle(token, line_no);
      } else {
        fail(line_no, "unexpected token '" + token + "'");
      }
    }
    t.rows.push_back(row);
  }
  t.validate();
  return t;
}

}  // namespace parqc
