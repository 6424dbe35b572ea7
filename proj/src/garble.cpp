// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/garble.hpp"

#include <stdexcept>

namespace everlast::garble {
namespace {

using KeyTable = std::vector<std::array<Label, 2>>;
// Which output key row (sa, sb) of gate i encrypts.
using RowTarget = bool (*)(const Gate& g, bool sa, bool sb, const std::vector<uint8_t>& v);

bool honest_target(const Gate& g, bool sa, bool sb, const std::vector<uint8_t>&) {
  return (g.table >> ((sa << 1) | sb)) & 1;
}
bool zero_target(const Gate&, bool, bool, const std::vector<uint8_t>&) { return false; }
bool value_target(const Gate& g, bool, bool, const std::vector<uint8_t>& v) { return v[g.c]; }

BitString key_bits(const Label& k) {
  Bytes b = crypto::ske_key_encode(k);
  return BitString::from_bytes(b, 8 * b.size());
}

std::array<uint8_t, 4> random_perm(Rng& rng) {
  std::array<uint8_t, 4> p = {0, 1, 2, 3};
  for (size_t i = 3; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

KeyTable fresh_keys(const ce::Ske& ske, const Circuit& c, Rng& rng) {
  KeyTable keys(c.n_wires);
  for (uint32_t w = c.n_inputs; w < c.n_wires; ++w)
    for (int s = 0; s < 2; ++s) keys[w][s] = ske.keygen(rng);
  return keys;
}

}  // namespace

Scheme::Scheme(size_t lambda, crypto::HashOracle H) : ske_(lambda, ce::Variant::kQrom, std::move(H)) {}

Labels Scheme::setup(size_t n, Rng& rng) const {
  Labels out(n);
  for (auto& pair : out)
    for (auto& k : pair) k = ske_.keygen(rng);
  return out;
}

std::vector<Label> select_labels(const Labels& labels, const BitString& x) {
  if (labels.size() != x.size()) throw std::invalid_argument("select_labels: length mismatch");
  std::vector<Label> out;
  out.reserve(x.size());
  for (size_t i = 0; i < x.size(); ++i) out.push_back(labels[i][x[i]]);
  return out;
}

namespace {

struct Build {
  GarbledCircuit gc;
  ce::VkBundle vk;
};

// Garbles gates [0, split) with `early` and the rest with `late`.
Build build(const ce::Ske& ske, const Circuit& c, const KeyTable& keys, RowTarget early, RowTarget late,
            size_t split, const std::vector<uint8_t>& values, const qsim::RegisterPtr& reg, Rng& rng,
            PermTrace* trace) {
  Build out;
  out.gc.topology = c.topology();
  out.gc.gates.resize(c.gates.size());
  size_t share_bits = 8 * crypto::ske_key_bytes(ske.lambda());
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    RowTarget target = i < split ? early : late;
    auto perm = random_perm(rng);
    if (trace != nullptr) trace->push_back(perm);
    std::array<std::array<otcd::Key, 2>, 4> vks;
    for (int k = 0; k < 4; ++k) {
      bool sa = k >> 1, sb = k & 1;
      BitString p = BitString::random(share_bits, rng);
      BitString pc = p ^ key_bits(keys[g.c][target(g, sa, sb, values)]);
      GarbledRow& row = out.gc.gates[i].rows[perm[k]];
      row.a = ske.enc_qrom(keys[g.a][sa], p, reg, rng, &vks[perm[k]][0]);
      row.b = ske.enc_qrom(keys[g.b][sb], pc, reg, rng, &vks[perm[k]][1]);
    }
    for (auto& rv : vks)
      for (auto& v : rv) out.vk.parts.emplace_back(std::move(v));
  }
  return out;
}

void set_outputs(GarbledCircuit& gc, const Circuit& c, const KeyTable& keys, const BitString* programmed) {
  for (size_t i = 0; i < c.outputs.size(); ++i) {
    OutputMap d;
    bool y = programmed != nullptr && (*programmed)[i];
    for (int s = 0; s < 2; ++s) {
      d.key[s] = keys[c.outputs[i]][s];
      d.bit[s] = static_cast<bool>(s) != y;
    }
    gc.outputs.push_back(std::move(d));
  }
}

}  // namespace

std::pair<GarbledCircuit, ce::VkBundle> Scheme::garble(const Circuit& c, const Labels& labels,
                                                       const qsim::RegisterPtr& reg, Rng& rng,
                                                       PermTrace* trace) const {
  c.validate();
  if (labels.size() != c.n_inputs) throw std::invalid_argument("garble: label count does not match inputs");
  KeyTable keys = fresh_keys(ske_, c, rng);
  for (uint32_t i = 0; i < c.n_inputs; ++i) keys[i] = labels[i];
  Build b = build(ske_, c, keys, honest_target, honest_target, 0, {}, reg, rng, trace);
  set_outputs(b.gc, c, keys, nullptr);
  return {std::move(b.gc), std::move(b.vk)};
}

std::optional<BitString> Scheme::eval(GarbledCircuit& gc, const std::vector<Label>& input) const {
  const Circuit& c = gc.topology;
  if (input.size() != c.n_inputs) throw std::invalid_argument("eval: label count does not match inputs");
  if (gc.gates.size() != c.gates.size()) throw FormatError("eval: gate count does not match topology");
  std::vector<Label> keys(c.n_wires);
  for (uint32_t i = 0; i < c.n_inputs; ++i) keys[i] = input[i];
  for (size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    GarbledGate& gg = gc.gates[i];
    int hit = -1;
    std::optional<otcd::Key> ka, kb;
    for (int k = 0; k < 4; ++k) {
      auto ua = ske_.unlock(keys[g.a], gg.rows[k].a);
      if (!ua) continue;
      auto ub = ske_.unlock(keys[g.b], gg.rows[k].b);
      if (!ub) continue;
      if (hit >= 0) return std::nullopt;  // more than one row opens
      hit = k;
      ka = std::move(ua);
      kb = std::move(ub);
    }
    if (hit < 0) return std::nullopt;
    GarbledRow& row = gg.rows[hit];
    BitString q = otcd::dec(*ka, row.a.body) ^ otcd::dec(*kb, row.b.body);
    if (q.size() % 8 != 0 || q.size() / 8 != crypto::ske_key_bytes(lambda())) return std::nullopt;
    keys[g.c] = crypto::ske_key_decode(q.to_bytes(), lambda());
  }
  BitString y(c.outputs.size());
  for (size_t i = 0; i < c.outputs.size(); ++i) {
    const OutputMap& d = gc.outputs[i];
    const Label& k = keys[c.outputs[i]];
    if (k == d.key[0]) y.set(i, d.bit[0]);
    else if (k == d.key[1]) y.set(i, d.bit[1]);
    else return std::nullopt;
  }
  return y;
}

std::pair<GarbledCircuit, ce::VkBundle> Scheme::sim_garble(const Circuit& topology, const BitString& y,
                                                           const std::vector<Label>& input,
                                                           const qsim::RegisterPtr& reg, Rng& rng) const {
  topology.validate();
  if (input.size() != topology.n_inputs) throw std::invalid_argument("sim_garble: label count does not match inputs");
  if (y.size() != topology.outputs.size()) throw std::invalid_argument("sim_garble: output length mismatch");
  KeyTable keys = fresh_keys(ske_, topology, rng);
  for (uint32_t i = 0; i < topology.n_inputs; ++i) {
    keys[i][0] = input[i];
    keys[i][1] = ske_.keygen(rng);
  }
  Build b = build(ske_, topology.topology(), keys, zero_target, zero_target, 0, {}, reg, rng, nullptr);
  set_outputs(b.gc, topology, keys, &y);
  return {std::move(b.gc), std::move(b.vk)};
}

std::pair<GarbledCircuit, ce::VkBundle> Scheme::inputdep_sim_upto(const Circuit& c, const BitString& x,
                                                                  const std::vector<Label>& input, size_t j,
                                                                  const qsim::RegisterPtr& reg, Rng& rng) const {
  c.validate();
  if (j > c.gates.size()) throw std::out_of_range("inputdep_sim_upto: j exceeds gate count");
  if (input.size() != c.n_inputs) throw std::invalid_argument("inputdep_sim_upto: label count does not match inputs");
  auto v = c.wire_values(x);
  KeyTable keys = fresh_keys(ske_, c, rng);
  for (uint32_t i = 0; i < c.n_inputs; ++i) {
    keys[i][x[i]] = input[i];
    keys[i][!x[i]] = ske_.keygen(rng);
  }
  Build b = build(ske_, c, keys, value_target, honest_target, j, v, reg, rng, nullptr);
  set_outputs(b.gc, c, keys, nullptr);
  return {std::move(b.gc), std::move(b.vk)};
}

ce::CertBundle del(GarbledCircuit& gc) {
  for (auto& g : gc.gates)
    for (auto& r : g.rows) {
      r.a.body.qubits.reg();
      r.b.body.qubits.reg();
    }
  ce::CertBundle out;
  for (auto& g : gc.gates)
    for (auto& r : g.rows) {
      out.parts.emplace_back(otcd::del(r.a.body));
      out.parts.emplace_back(otcd::del(r.b.body));
    }
  return out;
}

bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert) { return ce::verify(vk, cert); }

ce::Layout layout(const GarbledCircuit& gc) {
  ce::Layout l;
  for (const auto& g : gc.gates)
    for (const auto& r : g.rows) {
      l.push_back({static_cast<uint32_t>(r.a.body.qubits.size()), false});
      l.push_back({static_cast<uint32_t>(r.b.body.qubits.size()), false});
    }
  return l;
}

std::vector<qsim::QubitHandle*> segments(GarbledCircuit& gc) {
  std::vector<qsim::QubitHandle*> s;
  for (auto& g : gc.gates)
    for (auto& r : g.rows) {
      s.push_back(&r.a.body.qubits);
      s.push_back(&r.b.body.qubits);
    }
  return s;
}

std::vector<size_t> shape(const GarbledCircuit& gc) {
  std::vector<size_t> s = {gc.topology.n_inputs, gc.topology.n_wires, gc.gates.size(), gc.outputs.size()};
  for (const auto& g : gc.gates)
    for (const auto& r : g.rows)
      for (const auto* ct : {&r.a, &r.b})
        s.insert(s.end(), {ct->h.size(), ct->classical.size(), ct->body.qubits.size(), ct->body.c.size()});
  for (const auto& d : gc.outputs)
    for (const auto& k : d.key) s.push_back(crypto::ske_key_encode(k).size());
  return s;
}

}  // namespace everlast::garble
