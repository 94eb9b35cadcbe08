// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace parqc {

namespace {

// Hand-rolled scanner/parser for the OpenQASM 2 subset. Tracks line and
// column so syntax errors point at the offending token.
class Parser {
 public:
  explicit Parser(const std::string& text, std::vector<std::string>* warnings)
      : text_(text), warnings_(warnings) {}

  LogicalCircuit run() {
    skip_ws();
    if (peek_word("OPENQASM")) {
      expect_word("OPENQASM");
      parse_number();  // version, unused beyond syntax
      expect(';');
    }
    while (!at_end()) {
      statement();
      skip_ws();
    }
    if (!saw_qreg_) error("missing qreg declaration");
    circuit_.validate();
    return circuit_;
  }

 private:
  void statement() {
    if (peek_word("include")) {
      expect_word("include");
      parse_string();
      expect(';');
      return;
    }
    if (peek_word("qreg")) {
      if (saw_qreg_) error("qreg redeclared; a single quantum register is supported");
      expect_word("qreg");
      qreg_name_ = parse_ident();
      expect('[');
      circuit_.num_qubits = static_cast<std::uint32_t>(parse_integer());
      expect(']');
      expect(';');
      saw_qreg_ = true;
      return;
    }
    if (peek_word("creg")) {
      expect_word("creg");
      parse_ident();
      expect('[');
      parse_integer();
      expect(']');
      expect(';');
      return;
    }
    if (peek_word("measure")) {
      int line = line_;
      skip_statement();
      warn("measure statement at line " + std::to_string(line) + " dropped");
      return;
    }
    if (peek_word("barrier")) {
      int line = line_;
      skip_statement();
      warn("barrier statement at line " + std::to_string(line) + " dropped");
      return;
    }
    gate_statement();
  }

  void gate_statement() {
    if (!saw_qreg_) error("gate statement before qreg declaration");
    int line = line_, col = col_;
    std::string name = parse_ident();
    auto kind = gate_from_name(name);
    if (!kind) throw QasmError("unsupported gate '" + name + "'", line, col);

    std::vector<double> params;
    skip_ws();
    if (peek() == '(') {
      expect('(');
      params.push_back(parse_expr());
      skip_ws();
      while (peek() == ',') {
        expect(',');
        params.push_back(parse_expr());
        skip_ws();
      }
      expect(')');
    }
    std::vector<std::uint32_t> operands;
    operands.push_back(parse_qubit_ref());
    skip_ws();
    while (peek() == ',') {
      expect(',');
      operands.push_back(parse_qubit_ref());
      skip_ws();
    }
    expect(';');

    if (params.size() != static_cast<std::size_t>(gate_param_count(*kind))) {
      throw QasmError("gate '" + name + "' expects " + std::to_string(gate_param_count(*kind)) +
                          " parameter(s)",
                      line, col);
    }
    if (operands.size() != static_cast<std::size_t>(gate_arity(*kind))) {
      throw QasmError("gate '" + name + "' expects " + std::to_string(gate_arity(*kind)) +
                          " operand(s)",
                      line, col);
    }
    for (auto q : operands) {
      if (q >= circuit_.num_qubits) {
        throw QasmError("qubit index " + std::to_string(q) + " out of range", line, col);
      }
    }
    if (operands.size() == 2 && operands[0] == operands[1]) {
      throw QasmError("gate '" + name + "' operands must be distinct", line, col);
    }
    circuit_.instructions.push_back({*kind, std::move(params), std::move(operands)});
  }

  std::uint32_t parse_qubit_ref() {
    int line = line_, col = col_;
    std::string name = parse_ident();
    if (name != qreg_name_) throw QasmError("unknown register '" + name + "'", line, col);
    expect('[');
    auto idx = parse_integer();
    expect(']');
    return static_cast<std::uint32_t>(idx);
  }

  // Expression grammar for angle arguments:
  //   expr   := term (('+'|'-') term)*
  //   term   := factor (('*'|'/') factor)*
  //   factor := '-' factor | '(' expr ')' | 'pi' | number
  double parse_expr() {
    double v = parse_term();
    skip_ws();
    while (peek() == '+' || peek() == '-') {
      char op = advance();
      double rhs = parse_term();
      v = (op == '+') ? v + rhs : v - rhs;
      skip_ws();
    }
    return v;
  }

  double parse_term() {
    double v = parse_factor();
    skip_ws();
    while (peek() == '*' || peek() == '/') {
      char op = advance();
      double rhs = parse_factor();
      if (op == '/') {
        if (rhs == 0.0) error("division by zero in angle expression");
        v /= rhs;
      } else {
        v *= rhs;
      }
      skip_ws();
    }
    return v;
  }

  double parse_factor() {
    skip_ws();
    if (peek() == '-') {
      advance();
      return -parse_factor();
    }
    if (peek() == '(') {
      expect('(');
      double v = parse_expr();
      expect(')');
      return v;
    }
    if (std::isalpha(static_cast<unsigned char>(peek()))) {
      int line = line_, col = col_;
      std::string word = parse_ident();
      if (word == "pi") return std::numbers::pi;
      throw QasmError("unknown symbol '" + word + "' in angle expression", line, col);
    }
    return parse_number();
  }

  double parse_number() {
    skip_ws();
    int line = line_, col = col_;
    std::size_t start = pos_;
    while (!at_end_raw() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E' ||
                             ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ > start &&
                              (text_[pos_ - 1] == 'e' || text_[pos_ - 1] == 'E')))) {
      bump();
    }
    if (pos_ == start) throw QasmError("expected a number", line, col);
    double value = 0;
    auto r = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (r.ec != std::errc()) throw QasmError("malformed number", line, col);
    return value;
  }

  long parse_integer() {
    skip_ws();
    int line = line_, col = col_;
    std::size_t start = pos_;
    while (!at_end_raw() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
    if (pos_ == start) throw QasmError("expected an integer", line, col);
    long value = 0;
    std::from_chars(text_.data() + start, text_.data() + pos_, value);
    return value;
  }

  std::string parse_ident() {
    skip_ws();
    int line = line_, col = col_;
    std::size_t start = pos_;
    while (!at_end_raw() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                             text_[pos_] == '_')) {
      bump();
    }
    if (pos_ == start) throw QasmError("expected an identifier", line, col);
    return text_.substr(start, pos_ - start);
  }

  std::string parse_string() {
    skip_ws();
    expect('"');
    std::size_t start = pos_;
    while (!at_end_raw() && text_[pos_] != '"') bump();
    if (at_end_raw()) error("unterminated string");
    std::string s = text_.substr(start, pos_ - start);
    bump();
    return s;
  }

  void skip_statement() {
    while (!at_end_raw() && text_[pos_] != ';') bump();
    expect(';');
  }

  bool peek_word(std::string_view word) {
    skip_ws();
    if (pos_ + word.size() > text_.size()) return false;
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    std::size_t after = pos_ + word.size();
    return after >= text_.size() ||
           !(std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_');
  }

  void expect_word(std::string_view word) {
    if (!peek_word(word)) error("expected '" + std::string(word) + "'");
    for (std::size_t i = 0; i < word.size(); ++i) bump();
  }

  void expect(char c) {
    skip_ws();
    if (at_end_raw() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    bump();
  }

  char peek() {
    skip_ws();
    return at_end_raw() ? '\0' : text_[pos_];
  }

  char advance() {
    skip_ws();
    char c = text_[pos_];
    bump();
    return c;
  }

  void skip_ws() {
    while (!at_end_raw()) {
      char c = text_[pos_];
      if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
        while (!at_end_raw() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  bool at_end_raw() const { return pos_ >= text_.size(); }

  bool at_end() {
    skip_ws();
    return at_end_raw();
  }

  [[noreturn]] void error(const std::string& message) { throw QasmError(message, line_, col_); }

  void warn(std::string message) {
    if (warnings_) warnings_->push_back(std::move(message));
  }

  const std::string& text_;
  std::vector<std::string>* warnings_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  bool saw_qreg_ = false;
  std::string qreg_name_;
  LogicalCircuit circuit_;
};

std::string format_angle(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

LogicalCircuit parse_qasm(const std::string& text, std::vector<std::string>* warnings) {
  return Parser(text, warnings).run();
}

std::string emit_qasm(const LogicalCircuit& circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\n";
  out << "include \"qelib1.inc\";\n";
  out << "qreg q[" << circuit.num_qubits << "];\n";
  for (const auto& g : circuit.instructions) {
    out << gate_name(g.kind);
    if (!g.params.empty()) {
      out << '(';
      for (std::size_t i = 0; i < g.params.size(); ++i) {
        if (i) out << ',';
        out << format_angle(g.params[i]);
      }
      out << ')';
    }
    out << ' ';
    for (std::size_t i = 0; i < g.operands.size(); ++i) {
      if (i) out << ',';
      out << "q[" << g.operands[i] << ']';
    }
    out << ";\n";
  }
  return out.str();
}

}  // namespace parqc
