// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "everlast/bits.hpp"

namespace everlast::garble {

// Two-input gate. Bit (sa << 1 | sb) of table is g(sa, sb).
struct Gate {
  uint8_t table = 0;
  uint32_t a = 0;
  uint32_t b = 0;
  uint32_t c = 0;
  uint32_t level = 1;
  friend bool operator==(const Gate&, const Gate&) = default;
};

// Wires 0..n_inputs-1 are inputs (level 0); every other wire is the output
// of exactly one gate. Gates are sorted by level and each gate reads only
// wires of strictly lower level.
struct Circuit {
  uint32_t n_inputs = 0;
  uint32_t n_wires = 0;
  std::vector<Gate> gates;
  std::vector<uint32_t> outputs;

  // Throws std::invalid_argument on a malformed or non-leveled circuit.
  void validate() const;
  // True when every gate reads only inputs or gates of the previous level.
  bool strictly_leveled() const;
  std::vector<uint8_t> wire_values(const BitString& x) const;
  BitString eval(const BitString& x) const;
  // Same wiring with every truth table blanked.
  Circuit topology() const;
  uint32_t depth() const { return gates.empty() ? 0 : gates.back().level; }
};

// Appends gates with levels computed as 1 + max(level of inputs).
class CircuitBuilder {
 public:
  explicit CircuitBuilder(uint32_t n_inputs);
  uint32_t gate(uint8_t table, uint32_t a, uint32_t b);
  uint32_t unary(uint8_t table_of_a, uint32_t a);  // 2-entry table, bit v = g(v)
  uint32_t xor_(uint32_t a, uint32_t b) { return gate(0b0110, a, b); }
  uint32_t and_(uint32_t a, uint32_t b) { return gate(0b1000, a, b); }
  uint32_t not_(uint32_t a) { return unary(0b01, a); }
  // Builds a valid circuit, sorting gates by level.
  Circuit finish(std::vector<uint32_t> outputs) &&;

 private:
  Circuit c_;
  std::vector<uint32_t> level_;
};

// Layered random circuit: each gate reads inputs or gates of the previous
// level, truth tables uniform over all 16 two-input functions.
Circuit random_leveled_circuit(uint32_t n_inputs, uint32_t n_gates, uint32_t n_outputs, Rng& rng);

}  // namespace everlast::garble
