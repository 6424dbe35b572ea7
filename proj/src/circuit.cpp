// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace everlast::garble {

void Circuit::validate() const {
  if (n_wires < n_inputs) throw std::invalid_argument("circuit: fewer wires than inputs");
  if (n_wires - n_inputs != gates.size()) throw std::invalid_argument("circuit: wire count does not match gates");
  std::vector<int64_t> level(n_wires, -1);
  for (uint32_t i = 0; i < n_inputs; ++i) level[i] = 0;
  uint32_t prev = 0;
  for (const Gate& g : gates) {
    if (g.table > 15) throw std::invalid_argument("circuit: truth table has more than 4 entries");
    if (g.level == 0 || g.level < prev) throw std::invalid_argument("circuit: gates not sorted by level");
    prev = g.level;
    if (g.a >= n_wires || g.b >= n_wires || level[g.a] < 0 || level[g.b] < 0)
      throw std::invalid_argument("circuit: gate reads an undefined wire");
    if (level[g.a] >= g.level || level[g.b] >= g.level)
      throw std::invalid_argument("circuit: level violation");
    if (g.c < n_inputs || g.c >= n_wires || level[g.c] >= 0)
      throw std::invalid_argument("circuit: gate output wire reused or out of range");
    level[g.c] = g.level;
  }
  for (uint32_t o : outputs)
    if (o >= n_wires) throw std::invalid_argument("circuit: output wire out of range");
}

bool Circuit::strictly_leveled() const {
  std::vector<uint32_t> level(n_wires, 0);
  for (const Gate& g : gates) {
    for (uint32_t w : {g.a, g.b})
      if (w >= n_inputs && level[w] + 1 != g.level) return false;
    level[g.c] = g.level;
  }
  return true;
}

std::vector<uint8_t> Circuit::wire_values(const BitString& x) const {
  if (x.size() != n_inputs) throw std::invalid_argument("circuit: input length mismatch");
  std::vector<uint8_t> v(n_wires, 0);
  for (uint32_t i = 0; i < n_inputs; ++i) v[i] = x[i];
  for (const Gate& g : gates) v[g.c] = (g.table >> ((v[g.a] << 1) | v[g.b])) & 1;
  return v;
}

BitString Circuit::eval(const BitString& x) const {
  auto v = wire_values(x);
  BitString y(outputs.size());
  for (size_t i = 0; i < outputs.size(); ++i) y.set(i, v[outputs[i]]);
  return y;
}

Circuit Circuit::topology() const {
  Circuit t = *this;
  for (Gate& g : t.gates) g.table = 0;
  return t;
}

CircuitBuilder::CircuitBuilder(uint32_t n_inputs) : level_(n_inputs, 0) {
  c_.n_inputs = n_inputs;
  c_.n_wires = n_inputs;
}

uint32_t CircuitBuilder::gate(uint8_t table, uint32_t a, uint32_t b) {
  if (a >= c_.n_wires || b >= c_.n_wires) throw std::invalid_argument("builder: unknown wire");
  Gate g;
  g.table = table & 15;
  g.a = a;
  g.b = b;
  g.c = c_.n_wires++;
  g.level = std::max(level_[a], level_[b]) + 1;
  level_.push_back(g.level);
  c_.gates.push_back(g);
  return g.c;
}

uint32_t CircuitBuilder::unary(uint8_t t, uint32_t a) {
  // g(sa, sb) with sa == sb: entries 0b00 and 0b11 matter.
  uint8_t table = static_cast<uint8_t>((t & 1) | ((t & 1) << 1) | ((t >> 1 & 1) << 2) | ((t >> 1 & 1) << 3));
  return gate(table, a, a);
}

Circuit CircuitBuilder::finish(std::vector<uint32_t> outputs) && {
  std::stable_sort(c_.gates.begin(), c_.gates.end(),
                   [](const Gate& x, const Gate& y) { return x.level < y.level; });
  c_.outputs = std::move(outputs);
  c_.validate();
  return std::move(c_);
}

Circuit random_leveled_circuit(uint32_t n_inputs, uint32_t n_gates, uint32_t n_outputs, Rng& rng) {
  if (n_inputs == 0) throw std::invalid_argument("random circuit needs at least one input");
  Circuit c;
  c.n_inputs = n_inputs;
  c.n_wires = n_inputs;
  uint32_t levels = n_gates == 0 ? 0 : 1 + static_cast<uint32_t>(rng.below(std::min<uint32_t>(n_gates, 8)));
  // Every level gets at least one gate; the rest are spread uniformly.
  std::vector<uint32_t> per_level(levels, 1);
  for (uint32_t i = levels; i < n_gates; ++i) ++per_level[rng.below(levels)];
  std::vector<uint32_t> inputs(n_inputs);
  for (uint32_t i = 0; i < n_inputs; ++i) inputs[i] = i;
  std::vector<uint32_t> prev;
  for (uint32_t l = 0; l < levels; ++l) {
    std::vector<uint32_t> pool = inputs;
    pool.insert(pool.end(), prev.begin(), prev.end());
    std::vector<uint32_t> cur;
    for (uint32_t k = 0; k < per_level[l]; ++k) {
      Gate g;
      g.table = static_cast<uint8_t>(rng.below(16));
      // Anchor on the previous level so the level number is meaningful.
      g.a = l == 0 ? pool[rng.below(pool.size())] : prev[rng.below(prev.size())];
      g.b = pool[rng.below(pool.size())];
      if (rng.bit()) std::swap(g.a, g.b);
      g.c = c.n_wires++;
      g.level = l + 1;
      c.gates.push_back(g);
      cur.push_back(g.c);
    }
    prev = std::move(cur);
  }
  for (uint32_t i = 0; i < n_outputs; ++i) {
    if (i < prev.size() && rng.bit()) c.outputs.push_back(prev[i]);
    else c.outputs.push_back(static_cast<uint32_t>(rng.below(c.n_wires)));
  }
  c.validate();
  return c;
}

}  // namespace everlast::garble
