// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/oracle.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

#include "everlast/circuit.hpp"

namespace everlast::oracle {

DenseState::DenseState(size_t n) : n_(n), psi_(size_t{1} << n, Amp(0, 0)) {
  if (n > 20) throw std::length_error("dense oracle limited to 20 qubits");
  psi_[0] = 1;
}

void DenseState::x(size_t q) {
  size_t b = size_t{1} << q;
  for (size_t i = 0; i < psi_.size(); ++i)
    if (!(i & b)) std::swap(psi_[i], psi_[i | b]);
}

void DenseState::z(size_t q) {
  size_t b = size_t{1} << q;
  for (size_t i = 0; i < psi_.size(); ++i)
    if (i & b) psi_[i] = -psi_[i];
}

void DenseState::h(size_t q) {
  const double s = 1.0 / std::sqrt(2.0);
  size_t b = size_t{1} << q;
  for (size_t i = 0; i < psi_.size(); ++i) {
    if (i & b) continue;
    Amp a0 = psi_[i], a1 = psi_[i | b];
    psi_[i] = s * (a0 + a1);
    psi_[i | b] = s * (a0 - a1);
  }
}

void DenseState::cnot(size_t c, size_t t) {
  size_t bc = size_t{1} << c, bt = size_t{1} << t;
  for (size_t i = 0; i < psi_.size(); ++i)
    if ((i & bc) && !(i & bt)) std::swap(psi_[i], psi_[i | bt]);
}

double DenseState::prob_one(size_t q) const {
  double p = 0;
  size_t b = size_t{1} << q;
  for (size_t i = 0; i < psi_.size(); ++i)
    if (i & b) p += std::norm(psi_[i]);
  return p;
}

void DenseState::collapse(size_t q, bool outcome) {
  double p = outcome ? prob_one(q) : 1.0 - prob_one(q);
  if (p <= 0) throw std::domain_error("collapse onto a zero-probability outcome");
  double s = 1.0 / std::sqrt(p);
  size_t b = size_t{1} << q;
  for (size_t i = 0; i < psi_.size(); ++i) {
    if (static_cast<bool>(i & b) == outcome) psi_[i] *= s;
    else psi_[i] = 0;
  }
}

std::vector<Amp> statevector(size_t n, const std::vector<Op>& ops) {
  DenseState s(n);
  for (const Op& op : ops) {
    switch (op.kind) {
      case Op::Kind::kX: s.x(op.a); break;
      case Op::Kind::kZ: s.z(op.a); break;
      case Op::Kind::kH: s.h(op.a); break;
      case Op::Kind::kCnot: s.cnot(op.a, op.b); break;
    }
  }
  return s.amplitudes();
}

BitString circuit_eval(const garble::Circuit& c, const BitString& x) {
  if (x.size() != c.n_inputs) throw std::invalid_argument("circuit_eval: input length mismatch");
  std::vector<int> producer(c.n_wires, -1);
  for (size_t g = 0; g < c.gates.size(); ++g) producer[c.gates[g].c] = static_cast<int>(g);
  std::vector<std::optional<bool>> memo(c.n_wires);
  std::function<bool(uint32_t)> value = [&](uint32_t w) -> bool {
    if (w < c.n_inputs) return x[w];
    if (memo[w]) return *memo[w];
    int g = producer[w];
    if (g < 0) throw std::invalid_argument("circuit_eval: undriven wire");
    const auto& gate = c.gates[g];
    bool a = value(gate.a), b = value(gate.b);
    bool v = (gate.table >> ((a ? 2 : 0) | (b ? 1 : 0))) & 1;
    memo[w] = v;
    return v;
  };
  BitString y(c.outputs.size());
  for (size_t i = 0; i < c.outputs.size(); ++i) y.set(i, value(c.outputs[i]));
  return y;
}

}  // namespace everlast::oracle
