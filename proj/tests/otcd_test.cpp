// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "everlast/otcd.hpp"

using namespace everlast;
using namespace everlast::otcd;

namespace {

Key fixed_key(const char* theta, const char* z) {
  Key k{4, 1, BitString::from_string(theta), BitString::from_string(z)};
  return k;
}

}  // namespace

TEST(Otcd, AllComputationalExample) {
  auto reg = qsim::QuantumRegister::create(1);
  Key k = fixed_key("0000", "0000");
  Ciphertext ct = enc_with_pad(k, BitString::from_string("1"), BitString::from_string("1010"), reg);
  EXPECT_EQ(ct.c.to_string(), "1");
  EXPECT_EQ(dec(k, ct).to_string(), "1");
}

TEST(Otcd, AllHadamardExample) {
  auto reg = qsim::QuantumRegister::create(2);
  Key k = fixed_key("1111", "1010");
  for (const char* m : {"0", "1"}) {
    Ciphertext ct = enc(k, BitString::from_string(m), reg, reg->rng());
    EXPECT_EQ(ct.c.to_string(), m);
    Ciphertext ct2 = enc(k, BitString::from_string(m), reg, reg->rng());
    EXPECT_EQ(del(ct2), k.z);
  }
}

TEST(Otcd, RoundTripAndDeletion) {
  Rng rng(3);
  auto reg = qsim::QuantumRegister::create(3);
  for (size_t lambda : {1u, 8u, 16u}) {
    for (int t = 0; t < 300; ++t) {
      size_t n = 1 + rng.below(4);
      Key k = keygen(lambda, n, rng);
      EXPECT_TRUE((k.z & k.theta) == k.z);
      BitString m = BitString::random(n, rng);
      Ciphertext ct = enc(k, m, reg, rng);
      EXPECT_EQ(dec(k, ct), m);
      EXPECT_TRUE(ct.qubits.consumed());
      Ciphertext ct2 = enc(k, m, reg, rng);
      Cert cert = del(ct2);
      EXPECT_TRUE(vrfy(k, cert));
      EXPECT_THROW(dec(k, ct2), ConsumedError);
    }
  }
  EXPECT_EQ(reg->live_count(), 0u);
}

TEST(Otcd, CorruptedCertificateRejected) {
  Rng rng(4);
  auto reg = qsim::QuantumRegister::create(4);
  for (int t = 0; t < 200; ++t) {
    Key k = keygen(16, 2, rng);
    Ciphertext ct = enc(k, BitString::random(2, rng), reg, rng);
    Cert cert = del(ct);
    size_t flips = 0;
    for (size_t i = 0; i < cert.size(); ++i)
      if (k.theta[i]) {
        Cert bad = cert;
        bad.flip(i);
        EXPECT_FALSE(vrfy(k, bad));
        ++flips;
      } else {
        Cert other = cert;
        other.flip(i);
        EXPECT_TRUE(vrfy(k, other));
      }
  }
}

TEST(Otcd, ModifyUndoesPauliMask) {
  Rng rng(5);
  auto reg = qsim::QuantumRegister::create(5);
  for (int t = 0; t < 500; ++t) {
    Key k = keygen(8, 3, rng);
    Ciphertext ct = enc(k, BitString::random(3, rng), reg, rng);
    BitString a = BitString::random(24, rng), b = BitString::random(24, rng);
    qsim::apply_pauli(ct.qubits, a, b);
    Cert cert = del(ct);
    EXPECT_TRUE(vrfy(k, modify(a, b, cert)));
    // A wrong mask is caught unless it only differs off the checked positions.
    BitString b2 = BitString::random(24, rng);
    EXPECT_EQ(vrfy(k, modify(a, b2, cert)), masked_equal(b, b2, k.theta));
  }
}

TEST(Otcd, KeyEncodingRoundTrip) {
  Rng rng(6);
  Key k = keygen(16, 3, rng);
  Bytes b = encode_key(k);
  EXPECT_EQ(b.size(), encoded_key_bytes(16, 3));
  EXPECT_EQ(decode_key(b), k);
  Bytes cut(b.begin(), b.end() - 1);
  EXPECT_THROW(decode_key(cut), FormatError);
}

TEST(Otcd, ThetaMarginalIsUniform) {
  Rng rng(7);
  size_t ones = 0, total = 0;
  for (int t = 0; t < 1000; ++t) {
    Key k = keygen(16, 1, rng);
    ones += k.theta.popcount();
    total += 16;
  }
  EXPECT_LT(std::abs(static_cast<double>(ones) - total / 2.0), 3 * std::sqrt(total / 4.0));
}
