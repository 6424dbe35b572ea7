// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Binary linear codes and CSS pairs with canonical coset representatives.

#pragma once

#include <vector>

#include "everlast/bits.hpp"

namespace everlast::codes {

class LinearCode {
 public:
  LinearCode() = default;
  // Rows need not be independent; the code is their span.
  static LinearCode from_generator(const std::vector<BitString>& rows, size_t length, size_t distance_t = 0);

  size_t length() const { return q_; }
  size_t dimension() const { return rref_.size(); }
  size_t t() const { return t_; }
  // Row-reduced generator; row r has a 1 at pivots()[r] and 0 at every other pivot.
  const std::vector<BitString>& generator() const { return rref_; }
  const std::vector<BitString>& parity_check() const { return check_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  bool contains(const BitString& x) const;
  // Canonical representative of x + C: the unique coset element that is
  // zero on every pivot column.
  BitString coset_mod(const BitString& x) const;
  BitString encode(const BitString& coeffs) const;  // sum of coeffs[r] * row r

 private:
  size_t q_ = 0;
  size_t t_ = 0;
  std::vector<BitString> rref_;
  std::vector<size_t> pivots_;
  std::vector<BitString> check_;
};

enum class CosetSpace { kC1ModC2, kAmbientModC1, kC2, kC1 };

// C2 is a subcode of C1.
class CssPair {
 public:
  CssPair(LinearCode c1, LinearCode c2);
  // [7,4] Hamming code with its dual [7,3] simplex code as C2.
  static CssPair hamming7();

  const LinearCode& c1() const { return c1_; }
  const LinearCode& c2() const { return c2_; }
  size_t length() const { return c1_.length(); }

  BitString sample(CosetSpace space, Rng& rng) const;

  // One-bit plaintexts live in C1/C2, which has two cosets for the
  // Hamming pair: bit 0 is the zero coset, bit 1 the coset of all-ones.
  BitString encode_bit(bool m) const;
  bool decode_bit(const BitString& rep) const;

 private:
  LinearCode c1_, c2_;
  BitString one_rep_;
};

}  // namespace everlast::codes
