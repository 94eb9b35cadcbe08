// Copyright (c) 2026 parqc developers
//
// SPDX-License-Identifier: Apache-2.0

#include "parqc/unitary.hpp"

#include <complex>
#include <numbers>
#include <stdexcept>

namespace parqc {

namespace {

using Cplx = std::complex<double>;
constexpr Cplx kI{0.0, 1.0};

Eigen::Matrix2cd rx_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -kI * std::sin(t / 2), -kI * std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd ry_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::cos(t / 2), -std::sin(t / 2), std::sin(t / 2), std::cos(t / 2);
  return m;
}

Eigen::Matrix2cd rz_matrix(double t) {
  Eigen::Matrix2cd m;
  m << std::exp(-kI * (t / 2)), 0, 0, std::exp(kI * (t / 2));
  return m;
}

// Applies a one-qubit matrix to every column of u in place.
void apply_single(Eigen::MatrixXcd& u, std::uint32_t q, const Eigen::Matrix2cd& m) {
  const Eigen::Index dim = u.rows();
  const Eigen::Index bit = Eigen::Index(1) << q;
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if (i & bit) continue;
      Cplx a = u(i, col);
      Cplx b = u(i | bit, col);
      u(i, col) = m(0, 0) * a + m(0, 1) * b;
      u(i | bit, col) = m(1, 0) * a + m(1, 1) * b;
    }
  }
}

void apply_cx(Eigen::MatrixXcd& u, std::uint32_t ctrl, std::uint32_t tgt) {
  const Eigen::Index dim = u.rows();
  const Eigen::Index cbit = Eigen::Index(1) << ctrl;
  const Eigen::Index tbit = Eigen::Index(1) << tgt;
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & cbit) && !(i & tbit)) std::swap(u(i, col), u(i | tbit, col));
    }
  }
}

void apply_gate(Eigen::MatrixXcd& u, const LogicalInstruction& g) {
  switch (g.kind) {
    case GateKind::Rx:
      apply_single(u, g.operands[0], rx_matrix(g.params[0]));
      return;
    case GateKind::Ry:
      apply_single(u, g.operands[0], ry_matrix(g.params[0]));
      return;
    case GateKind::Rz:
      apply_single(u, g.operands[0], rz_matrix(g.params[0]));
      return;
    case GateKind::Cx:
      apply_cx(u, g.operands[0], g.operands[1]);
      return;
    default:
      break;
  }
  // Non-native kinds reuse their 2x2 / 4x4 definitions.
  Eigen::MatrixXcd m = gate_unitary(g.kind, g.params);
  if (m.rows() == 2) {
    apply_single(u, g.operands[0], m);
    return;
  }
  // Generic two-qubit application, first operand on the low bit.
  const Eigen::Index dim = u.rows();
  const Eigen::Index b0 = Eigen::Index(1) << g.operands[0];
  const Eigen::Index b1 = Eigen::Index(1) << g.operands[1];
  for (Eigen::Index col = 0; col < u.cols(); ++col) {
    for (Eigen::Index i = 0; i < dim; ++i) {
      if ((i & b0) || (i & b1)) continue;
      Eigen::Vector4cd v{u(i, col), u(i | b0, col), u(i | b1, col), u(i | b0 | b1, col)};
      Eigen::Vector4cd w = m * v;
      u(i, col) = w(0);
      u(i | b0, col) = w(1);
      u(i | b1, col) = w(2);
      u(i | b0 | b1, col) = w(3);
    }
  }
}

}  // namespace

Eigen::MatrixXcd gate_unitary(GateKind kind, const std::vector<double>& params) {
  constexpr double kPi = std::numbers::pi;
  const double r2 = 1.0 / std::sqrt(2.0);
  switch (kind) {
    case GateKind::Rx:
      return rx_matrix(params.at(0));
    case GateKind::Ry:
      return ry_matrix(params.at(0));
    case GateKind::Rz:
      return rz_matrix(params.at(0));
    case GateKind::X:
      return (Eigen::Matrix2cd() << 0, 1, 1, 0).finished();
    case GateKind::Y:
      return (Eigen::Matrix2cd() << 0, -kI, kI, 0).finished();
    case GateKind::Z:
      return (Eigen::Matrix2cd() << 1, 0, 0, -1).finished();
    case GateKind::H:
      return (Eigen::Matrix2cd() << r2, r2, r2, -r2).finished();
    case GateKind::S:
      return rz_matrix(kPi / 2) * std::exp(kI * (kPi / 4));
    case GateKind::Sdg:
      return rz_matrix(-kPi / 2) * std::exp(-kI * (kPi / 4));
    case GateKind::T:
      return rz_matrix(kPi / 4) * std::exp(kI * (kPi / 8));
    case GateKind::Tdg:
      return rz_matrix(-kPi / 4) * std::exp(-kI * (kPi / 8));
    case GateKind::Cx: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      // Control on the low bit: basis order 00, 01, 10, 11 with the first
      // operand as the least significant bit.
      m(0, 0) = 1;
      m(3, 1) = 1;
      m(2, 2) = 1;
      m(1, 3) = 1;
      return m;
    }
    case GateKind::Cz: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
      m(3, 3) = -1;
      return m;
    }
    case GateKind::Swap: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(0, 0) = 1;
      m(1, 2) = 1;
      m(2, 1) = 1;
      m(3, 3) = 1;
      return m;
    }
  }
  throw std::logic_error("unhandled gate kind");
}

Eigen::MatrixXcd circuit_unitary(const LogicalCircuit& circuit) {
  circuit.validate();
  if (circuit.num_qubits > 12) {
    throw std::invalid_argument("circuit_unitary supports at most 12 qubits");
  }
  const Eigen::Index dim = Eigen::Index(1) << circuit.num_qubits;
  Eigen::MatrixXcd u = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& g : circuit.instructions) apply_gate(u, g);
  return u;
}

bool equal_up_to_global_phase(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b,
                              double tolerance) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  if (std::abs(a(r, c)) < tolerance) return b.cwiseAbs().maxCoeff() < tolerance;
  if (std::abs(b(r, c)) < tolerance * 1e-3) return false;
  std::complex<double> phase = a(r, c) / b(r, c);
  phase /= std::abs(phase);
  return (a - phase * b).cwiseAbs().maxCoeff() <= tolerance;
}

}  // namespace parqc
