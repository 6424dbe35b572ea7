// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "everlast/errors.hpp"
#include "everlast/fe.hpp"

using namespace everlast;
using namespace everlast::fe;

namespace {

BitString idx(uint64_t v, size_t n) { return BitString::from_uint(v, n); }

void flip_first_classical_part(ce::CertBundle& cert) {
  for (auto& p : cert.parts)
    if (auto* c = std::get_if<otcd::Cert>(&p); c != nullptr && c->size() > 0) {
      for (size_t i = 0; i < c->size(); ++i) c->set(i, !(*c)[i]);
      return;
    }
  FAIL() << "no classical certificate part";
}

}  // namespace

TEST(Fe1, MuxRoundTripAndDeletion) {
  Rng rng(1);
  for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
    Fe1 s(8, v, crypto::HashOracle::random(rng), universal::mux(2, 1));
    auto [mpk, msk] = s.setup(rng);
    EXPECT_EQ(mpk.pk.size(), 4u);
    for (int t = 0; t < 10; ++t) {
      auto reg = qsim::QuantumRegister::create(t);
      BitString f = BitString::random(4, rng);
      BitString m = idx(rng.below(4), 2);
      Fe1Key sk = s.keygen(msk, f);
      auto e = s.enc(mpk, m, reg, rng);
      EXPECT_EQ(ce::layout_qubits(layout(e.ct)), s.ciphertext_qubits());
      auto y = s.dec(sk, e.ct);
      ASSERT_TRUE(y.has_value());
      EXPECT_EQ((*y)[0], f[m.to_uint()]);
      EXPECT_THROW(del(e.ct), ConsumedError);

      auto e2 = s.enc(mpk, m, reg, rng);
      auto cert = del(e2.ct);
      EXPECT_TRUE(vrfy(e2.vk, cert));
    }
  }
}

TEST(Fe1, TamperedCertificateRejected) {
  Rng rng(2);
  Fe1 s(8, ce::Variant::kQrom, crypto::HashOracle::random(rng), universal::mux(1, 1));
  auto [mpk, msk] = s.setup(rng);
  auto reg = qsim::QuantumRegister::create(2);
  for (int t = 0; t < 20; ++t) {
    auto e = s.enc(mpk, idx(t & 1, 1), reg, rng);
    auto cert = del(e.ct);
    flip_first_classical_part(cert);
    EXPECT_FALSE(vrfy(e.vk, cert));
  }
}

TEST(Fe1, KeyForOtherFunctionComputesThatFunction) {
  Rng rng(3);
  Fe1 s(8, ce::Variant::kQrom, crypto::HashOracle::random(rng), universal::mux(2, 2));
  auto [mpk, msk] = s.setup(rng);
  auto reg = qsim::QuantumRegister::create(3);
  BitString f = BitString::from_string("00011011");
  for (uint64_t i = 0; i < 4; ++i) {
    auto e = s.enc(mpk, idx(i, 2), reg, rng);
    EXPECT_EQ(s.dec(s.keygen(msk, f), e.ct), f.slice(2 * i, 2));
  }
}

TEST(Fead, RoundTripAndMaskedDeletion) {
  Rng rng(4);
  for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
    Fead s(8, v, crypto::HashOracle::random(rng), universal::mux(1, 1));
    auto [mpk, msk] = s.setup(rng);
    EXPECT_EQ(mpk.nce.pk.size(), 2 * s.masked_qubits());
    for (int t = 0; t < 3; ++t) {
      auto reg = qsim::QuantumRegister::create(10 + t);
      BitString f = BitString::random(2, rng);
      BitString m = idx(t & 1, 1);
      FeadKey sk = s.keygen(msk, f, rng);
      auto e = s.enc(mpk, m, reg, rng);
      auto y = s.dec(sk, e.ct);
      ASSERT_TRUE(y.has_value());
      EXPECT_EQ((*y)[0], f[m.to_uint()]);

      auto e2 = s.enc(mpk, m, reg, rng);
      auto cert = del(e2.ct);
      EXPECT_TRUE(vrfy(e2.vk, cert));
    }
  }
}

TEST(Fead, CertificateNeedsMaskCorrection) {
  // Without the modify step a masked certificate fails against the inner
  // verification key.
  Rng rng(5);
  Fead s(8, ce::Variant::kQrom, crypto::HashOracle::random(rng), universal::mux(1, 1));
  auto [mpk, msk] = s.setup(rng);
  auto reg = qsim::QuantumRegister::create(5);
  int rejected = 0;
  for (int t = 0; t < 3; ++t) {
    auto e = s.enc(mpk, idx(0, 1), reg, rng);
    auto cert = del(e.ct);
    if (!vrfy(e.vk.nad, cert.nad)) ++rejected;
  }
  EXPECT_EQ(rejected, 3);
}

TEST(Fead, ZeroMaskMatchesUnmasked) {
  Rng rng(6);
  Fead s(8, ce::Variant::kQrom, crypto::HashOracle::random(rng), universal::mux(1, 1));
  auto [mpk, msk] = s.setup(rng);
  auto reg = qsim::QuantumRegister::create(6);
  BitString zero(s.masked_qubits());
  auto e = s.enc_with_mask(mpk, idx(1, 1), zero, zero, reg, rng);
  auto cert = del(e.ct);
  EXPECT_TRUE(vrfy(e.vk.nad, cert.nad));
  EXPECT_THROW(s.enc_with_mask(mpk, idx(1, 1), BitString(3), zero, reg, rng), std::invalid_argument);
}

TEST(FeqParams, ChooseParams) {
  FeqParams p = choose_params(8, 2, 2, 2, FeqConstants{0.25, 17.0 / 128, 0.125, 1});
  EXPECT_EQ(p.t, 8u);
  EXPECT_EQ(p.N, 17u);
  EXPECT_EQ(p.v, 1u);
  EXPECT_EQ(p.S, 4u);
  EXPECT_EQ(p.p, 257u);
  EXPECT_EQ(p.t * p.D + 1, p.N);

  FeqParams big = choose_params(8, 2, 2, 2, FeqConstants{1, 1, 1, 1});
  EXPECT_EQ(big.t, 32u);
  EXPECT_EQ(big.N, 512u);
  EXPECT_EQ(big.p, 521u);
  EXPECT_THROW(choose_params(8, 2, 2, 2, FeqConstants{0.25, 0.1, 0.125, 1}), std::invalid_argument);
  EXPECT_THROW(choose_params(8, 1, 1, 1, FeqConstants{0.125, 2, 0.125, 1}, 2), std::invalid_argument);
  EXPECT_EQ(choose_params(8, 1, 1, 1, FeqConstants{0.125, 2, 0.125, 1}, 3).p, 3u);
}

TEST(Feq, SharesInterpolateToInput) {
  Rng rng(7);
  FeqParams p = choose_params(8, 2, 2, 2, FeqConstants{0.25, 17.0 / 128, 0.125, 1});
  Feq s(p, ce::Variant::kQrom, crypto::HashOracle::random(rng), FeqInner::kNonAdaptive);
  const auto& f = s.field();
  std::vector<uint64_t> x = {12, 200};
  auto rows = s.shares(x, rng);
  ASSERT_EQ(rows.size(), p.N);
  for (size_t k = 0; k < p.ell + p.S; ++k) {
    std::vector<std::pair<uint64_t, uint64_t>> pts;
    size_t deg = k < p.ell ? p.t : p.t * p.D;
    for (size_t i = 0; i <= deg; ++i) pts.emplace_back(i + 1, rows[i][k]);
    EXPECT_EQ(field::lagrange_at_zero(f, pts), k < p.ell ? x[k] : 0u);
  }
}

TEST(Feq, NonAdaptiveDecryptsPolynomial) {
  Rng rng(8);
  FeqParams p = choose_params(4, 1, 2, 2, FeqConstants{0.25, 0.75, 0.25, 1});
  Feq s(p, ce::Variant::kQrom, crypto::HashOracle::random(rng), FeqInner::kNonAdaptive);
  const auto& f = s.field();
  auto [mpk, msk] = s.setup(rng);
  for (int t = 0; t < 3; ++t) {
    std::vector<field::Term> terms;
    for (const auto& mono : s.shape().basis) terms.push_back({f.random(rng), mono});
    field::SparsePolynomial C(2, terms);
    FeqKey sk = s.keygen(msk, C, rng);
    EXPECT_EQ(sk.gamma.size(), p.t * p.D + 1);
    EXPECT_EQ(sk.delta.size(), p.v);
    std::vector<uint64_t> x = {f.random(rng), f.random(rng)};
    auto reg = qsim::QuantumRegister::create(t);
    auto e = s.enc(mpk, x, reg, rng);
    EXPECT_EQ(s.dec(sk, e.ct), C.eval(f, x));

    auto e2 = s.enc(mpk, x, reg, rng);
    auto cert = del(e2.ct);
    EXPECT_TRUE(vrfy(e2.vk, cert));
  }
}

TEST(Feq, AdaptiveInnerTinyParameters) {
  Rng rng(9);
  FeqParams p = choose_params(8, 1, 1, 1, FeqConstants{0.125, 2, 0.125, 1}, 3);
  ASSERT_EQ(p.N, 2u);
  Feq s(p, ce::Variant::kQrom, crypto::HashOracle::random(rng), FeqInner::kAdaptive);
  const auto& f = s.field();
  auto [mpk, msk] = s.setup(rng);
  field::SparsePolynomial C(1, {{2, {1}}, {1, {0}}});
  FeqKey sk = s.keygen(msk, C, rng);
  for (uint64_t x : {0u, 2u}) {
    auto reg = qsim::QuantumRegister::create(x);
    auto e = s.enc(mpk, {x}, reg, rng);
    EXPECT_EQ(s.dec(sk, e.ct), C.eval(f, {x}));
  }
  auto reg = qsim::QuantumRegister::create(99);
  auto e = s.enc(mpk, {1}, reg, rng);
  auto cert = del(e.ct);
  EXPECT_TRUE(vrfy(e.vk, cert));
}

TEST(Feq, RejectsTooHighDegree) {
  Rng rng(10);
  FeqParams p = choose_params(8, 1, 1, 1, FeqConstants{0.125, 2, 0.125, 1}, 3);
  Feq s(p, ce::Variant::kQrom, crypto::HashOracle::random(rng), FeqInner::kNonAdaptive);
  auto [mpk, msk] = s.setup(rng);
  field::SparsePolynomial C(1, {{1, {2}}});
  EXPECT_ANY_THROW(s.keygen(msk, C, rng));
}
