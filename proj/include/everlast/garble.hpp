// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Garbling with certified deletion. Wire labels are ce-ske keys; every
// gate becomes four rows of two QROM ce-ske ciphertexts that XOR-share the
// output-wire key, stored in a random order.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "everlast/ce.hpp"
#include "everlast/circuit.hpp"

namespace everlast::garble {

using Label = crypto::SkeKey;
// labels[i][sigma] for input wire i.
using Labels = std::vector<std::array<Label, 2>>;

struct GarbledRow {
  ce::QromCiphertext a;
  ce::QromCiphertext b;
};

struct GarbledGate {
  std::array<GarbledRow, 4> rows;
};

struct OutputMap {
  std::array<Label, 2> key;
  std::array<bool, 2> bit;
};

struct GarbledCircuit {
  Circuit topology;  // truth tables blanked
  std::vector<GarbledGate> gates;
  std::vector<OutputMap> outputs;
};

// For gate i, rows[perm[i][k]] holds the row for (sa, sb) = (k >> 1, k & 1).
using PermTrace = std::vector<std::array<uint8_t, 4>>;

class Scheme {
 public:
  Scheme(size_t lambda, crypto::HashOracle H);
  size_t lambda() const { return ske_.lambda(); }
  const ce::Ske& ske() const { return ske_; }

  Labels setup(size_t n, Rng& rng) const;
  // The verification key lists, per gate, the 8 ct vks in stored row order
  // (row k: a then b).
  std::pair<GarbledCircuit, ce::VkBundle> garble(const Circuit& c, const Labels& labels,
                                                 const qsim::RegisterPtr& reg, Rng& rng,
                                                 PermTrace* trace = nullptr) const;
  // Consumes the two ciphertexts of the winning row of each gate; wrong
  // rows are rejected by the classical layer and stay intact.
  std::optional<BitString> eval(GarbledCircuit& gc, const std::vector<Label>& input) const;

  // Every row of every gate encrypts the sk^0 key of its output wire; the
  // given labels play the role of sk^0 on input wires.
  std::pair<GarbledCircuit, ce::VkBundle> sim_garble(const Circuit& topology, const BitString& y,
                                                     const std::vector<Label>& input,
                                                     const qsim::RegisterPtr& reg, Rng& rng) const;
  // Gates 1..j encrypt sk_c^{v(c)} in every row, gates j+1..q are honest.
  std::pair<GarbledCircuit, ce::VkBundle> inputdep_sim_upto(const Circuit& c, const BitString& x,
                                                            const std::vector<Label>& input, size_t j,
                                                            const qsim::RegisterPtr& reg, Rng& rng) const;

 private:
  ce::Ske ske_;
};

// Labels selected by x.
std::vector<Label> select_labels(const Labels& labels, const BitString& x);

// Deletes every ciphertext, stored row order; throws ConsumedError if the
// circuit was evaluated.
ce::CertBundle del(GarbledCircuit& gc);
bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert);

// One classical segment per ciphertext, stored order.
ce::Layout layout(const GarbledCircuit& gc);
std::vector<qsim::QubitHandle*> segments(GarbledCircuit& gc);

// Sizes of every component (rows, ciphertext byte and qubit counts, output
// maps); equal for any two garblings of the same topology.
std::vector<size_t> shape(const GarbledCircuit& gc);

}  // namespace everlast::garble
