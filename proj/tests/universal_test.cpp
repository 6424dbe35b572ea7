// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "everlast/errors.hpp"
#include "everlast/universal.hpp"

using namespace everlast;
using namespace everlast::fe::universal;

namespace {

BitString bits_of(uint64_t v, size_t n) { return BitString::from_uint(v, n); }

// Direct sum_k d_k w_k mod p.
uint64_t linear_oracle(uint64_t p, const std::vector<uint64_t>& w, const BitString& d) {
  uint64_t acc = 0;
  for (size_t k = 0; k < w.size(); ++k)
    if (d[k]) acc = (acc + w[k]) % p;
  return acc;
}

}  // namespace

TEST(Mux, ExhaustiveSmall) {
  for (size_t n : {1u, 2u, 3u}) {
    const size_t out_bits = 2;
    Rng rng(n);
    for (int trial = 0; trial < 8; ++trial) {
      BitString table = BitString::random((size_t{1} << n) * out_bits, rng);
      for (uint64_t idx = 0; idx < (uint64_t{1} << n); ++idx) {
        auto c = mux_circuit(n, out_bits, bits_of(idx, n));
        EXPECT_EQ(c.gates.size(), ((size_t{1} << n) - 1) * out_bits);
        EXPECT_EQ(c.eval(table), table.slice(idx * out_bits, out_bits));
      }
    }
  }
}

TEST(Mux, TopologyIndependentOfMessage) {
  auto ref = mux_circuit(3, 2, bits_of(0, 3)).topology();
  for (uint64_t idx = 1; idx < 8; ++idx) EXPECT_EQ(mux_circuit(3, 2, bits_of(idx, 3)).topology().gates, ref.gates);
}

TEST(Linear, MatchesOracleOnRandomWeights) {
  Rng rng(7);
  for (uint64_t p : {2ull, 3ull, 17ull, 257ull}) {
    field::Field f(p);
    for (size_t K : {1u, 2u, 5u, 13u, 40u}) {
      for (int trial = 0; trial < 10; ++trial) {
        std::vector<uint64_t> w(K);
        for (auto& x : w) x = f.random(rng);
        auto c = linear_circuit(f, w);
        for (int s = 0; s < 20; ++s) {
          BitString d = BitString::random(K, rng);
          EXPECT_EQ(c.eval(d).to_uint(), linear_oracle(p, w, d)) << "p=" << p << " K=" << K;
        }
      }
    }
  }
}

TEST(Linear, ExtremeInputs) {
  field::Field f(257);
  std::vector<uint64_t> w(30, 256);
  auto c = linear_circuit(f, w);
  EXPECT_EQ(c.eval(BitString(30)).to_uint(), 0u);
  BitString all(30);
  for (size_t i = 0; i < 30; ++i) all.set(i, true);
  EXPECT_EQ(c.eval(all).to_uint(), (30 * 256) % 257);
  for (size_t i = 0; i < 30; ++i) {
    BitString one(30);
    one.set(i, true);
    EXPECT_EQ(c.eval(one).to_uint(), 256u);
  }
}

TEST(Linear, TopologyIndependentOfWeights) {
  field::Field f(17);
  Rng rng(9);
  std::vector<uint64_t> zero(21, 0);
  auto ref = linear_circuit(f, zero).topology();
  for (int t = 0; t < 10; ++t) {
    std::vector<uint64_t> w(21);
    for (auto& x : w) x = f.random(rng);
    auto c = linear_circuit(f, w).topology();
    EXPECT_EQ(c.gates, ref.gates);
    EXPECT_EQ(c.outputs, ref.outputs);
  }
}

TEST(Elements, RoundTripAndRejects) {
  field::Field f(257);
  std::vector<uint64_t> v = {0, 1, 128, 256};
  BitString b = encode_elements(f, v);
  EXPECT_EQ(b.size(), 4 * f.width());
  EXPECT_EQ(decode_elements(f, b), v);
  EXPECT_THROW(decode_elements(f, BitString(5)), FormatError);
  EXPECT_THROW(decode_elements(f, BitString::from_uint(300, 9)), FormatError);
  EXPECT_THROW(encode_elements(f, {257}), std::invalid_argument);
}

TEST(LinearUniversal, EvaluatesPolynomialPlusMaskedSum) {
  field::Field f(257);
  Rng rng(11);
  LinearShape shape = linear_shape(f, 2, 2, 4);
  EXPECT_EQ(shape.basis.size(), 6u);
  EXPECT_EQ(shape.desc_bits(), 6 * 9 + 4u);
  Universal u = linear(shape);
  for (int t = 0; t < 30; ++t) {
    std::vector<field::Term> terms;
    for (const auto& mono : shape.basis) terms.push_back({f.random(rng), mono});
    field::SparsePolynomial C(2, terms);
    std::vector<uint32_t> delta;
    for (uint32_t a = 0; a < 4; ++a)
      if (rng.below(2)) delta.push_back(a);
    std::vector<uint64_t> point(6);
    for (auto& x : point) x = f.random(rng);
    BitString m = encode_elements(f, point);
    uint64_t want = C.eval(f, {point[0], point[1]});
    for (uint32_t a : delta) want = f.add(want, point[2 + a]);
    auto c = u.build(m);
    EXPECT_EQ(c.n_inputs, u.desc_bits);
    EXPECT_EQ(c.eval(encode_linear_desc(shape, C, delta)).to_uint(), want);
  }
}
