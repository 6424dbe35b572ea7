// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "everlast/rnce.hpp"

using namespace everlast;
using namespace everlast::rnce;

namespace {

Scheme make(Rng& rng, ce::Variant v = ce::Variant::kQrom) { return Scheme(8, v, crypto::HashOracle::random(rng)); }

}  // namespace

TEST(Rnce, Shapes) {
  Rng rng(1);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(5, rng);
  EXPECT_EQ(pk.pk.size(), 5u);
  EXPECT_EQ(msk.sk.size(), 5u);
  SecretKey a = s.keygen(msk, rng), b = s.keygen(msk, rng);
  EXPECT_EQ(a.x.size(), 5u);
  for (size_t i = 0; i < 5; ++i) EXPECT_EQ(a.sk[i], msk.sk[i][a.x[i]]);
  auto reg = qsim::QuantumRegister::create(1);
  Encryption e = s.enc(pk, BitString(5), reg, rng);
  EXPECT_EQ(e.vk.parts.size(), 10u);
  EXPECT_EQ(ce::layout_qubits(layout(e.ct)), s.ciphertext_qubits(5));
}

TEST(Rnce, RealRoundTripTouchesOnlySelectedSide) {
  Rng rng(2);
  for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
    Scheme s = make(rng, v);
    auto [pk, msk] = s.setup(8, rng);
    for (int t = 0; t < 200; ++t) {
      auto reg = qsim::QuantumRegister::create(t);
      SecretKey sk = s.keygen(msk, rng);
      BitString m = BitString::random(8, rng);
      Encryption e = s.enc(pk, m, reg, rng);
      EXPECT_EQ(s.dec(sk, e.ct), m);
      for (size_t i = 0; i < 8; ++i) {
        EXPECT_TRUE(ce::is_consumed(e.ct.ct[i][sk.x[i]]));
        EXPECT_FALSE(ce::is_consumed(e.ct.ct[i][!sk.x[i]]));
      }
      EXPECT_EQ(reg->live_count(), s.ciphertext_qubits(8) / 2);
    }
  }
}

TEST(Rnce, FakeThenRevealDecryptsToAnyMessage) {
  Rng rng(3);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(8, rng);
  auto reg = qsim::QuantumRegister::create(3);
  for (const char* fixed : {"00000000", "11111111"}) {
    auto [e, aux] = s.fake(pk, reg, rng);
    BitString m = BitString::from_string(fixed);
    SecretKey sk = s.reveal(pk, msk, aux, m);
    EXPECT_EQ(sk.x, aux ^ m);
    EXPECT_EQ(s.dec(sk, e.ct), m);
  }
  for (int t = 0; t < 200; ++t) {
    auto [e, aux] = s.fake(pk, reg, rng);
    BitString m = BitString::random(8, rng);
    EXPECT_EQ(s.dec(s.reveal(pk, msk, aux, m), e.ct), m);
  }
}

TEST(Rnce, RevealedSelectorIsUniform) {
  // x* xor m over uniform x* for a fixed m: chi-square over 16 values.
  Rng rng(4);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(4, rng);
  BitString m = BitString::from_string("1011");
  std::array<int, 16> counts{};
  const int n = 4000;
  for (int t = 0; t < n; ++t) {
    BitString aux = BitString::random(4, rng);
    counts[s.reveal(pk, msk, aux, m).x.to_uint()]++;
  }
  double chi2 = 0, e = n / 16.0;
  for (int c : counts) chi2 += (c - e) * (c - e) / e;
  EXPECT_LT(chi2, 30.578);  // 15 dof, p = 0.01
}

TEST(Rnce, KeygenSelectorIsUniform) {
  Rng rng(5);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(1, rng);
  int ones = 0;
  const int n = 10000;
  for (int t = 0; t < n; ++t) ones += s.keygen(msk, rng).x[0];
  EXPECT_LT(std::abs(ones - n / 2.0), 3 * std::sqrt(n / 4.0));
}

TEST(Rnce, DeleteVerify) {
  Rng rng(6);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(6, rng);
  auto reg = qsim::QuantumRegister::create(6);
  for (int t = 0; t < 50; ++t) {
    Encryption e = s.enc(pk, BitString::random(6, rng), reg, rng);
    ce::CertBundle cert = del(e.ct);
    EXPECT_TRUE(vrfy(e.vk, cert));
  }
  Encryption e = s.enc(pk, BitString::random(6, rng), reg, rng);
  ce::CertBundle cert = del(e.ct);
  const auto& k = std::get<otcd::Key>(e.vk.parts[7]);
  auto& c = std::get<otcd::Cert>(cert.parts[7]);
  for (size_t i = 0; i < c.size(); ++i)
    if (k.theta[i]) {
      c.flip(i);
      break;
    }
  EXPECT_FALSE(vrfy(e.vk, cert));
  Encryption d = s.enc(pk, BitString::random(6, rng), reg, rng);
  s.dec(s.keygen(msk, rng), d.ct);
  EXPECT_THROW(del(d.ct), ConsumedError);
}

TEST(Rnce, SingleBitZeroDecryptsRegardlessOfSelector) {
  Rng rng(7);
  Scheme s = make(rng);
  auto [pk, msk] = s.setup(1, rng);
  auto reg = qsim::QuantumRegister::create(7);
  for (int t = 0; t < 20; ++t) {
    Encryption e = s.enc(pk, BitString(1), reg, rng);
    EXPECT_EQ(s.dec(s.keygen(msk, rng), e.ct), BitString(1));
  }
}
