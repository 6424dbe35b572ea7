// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <filesystem>

#include "everlast/artifact.hpp"
#include "everlast/serial.hpp"

using namespace everlast;
using serial::decode;
using serial::encode;

namespace {

// write -> read -> write gives identical bytes.
template <class T>
T round_trip(const T& v, const qsim::RegisterPtr& reg) {
  Bytes a = encode(v);
  T back = decode<T>(a, reg);
  EXPECT_EQ(encode(back), a);
  return back;
}

}  // namespace

TEST(Serial, Leaves) {
  auto reg = qsim::QuantumRegister::create(1);
  Rng rng(1);
  BitString b = BitString::random(77, rng);
  EXPECT_EQ(round_trip(b, reg), b);
  EXPECT_EQ(round_trip(BitString(), reg), BitString());
  auto sk = crypto::ske_keygen(8, rng);
  EXPECT_EQ(round_trip(sk, reg), sk);
  auto kp = crypto::pke_keygen(rng);
  EXPECT_EQ(round_trip(kp.pk, reg), kp.pk);
  EXPECT_EQ(round_trip(kp.sk, reg), kp.sk);
  std::optional<uint32_t> o = 5;
  EXPECT_EQ(round_trip(o, reg), o);
  std::variant<uint32_t, BitString> v = b;
  EXPECT_EQ(round_trip(v, reg), v);
}

TEST(Serial, RejectsTruncationAndTrailingBytes) {
  auto reg = qsim::QuantumRegister::create(1);
  Rng rng(2);
  Bytes a = encode(BitString::random(40, rng));
  Bytes cut(a.begin(), a.end() - 1);
  EXPECT_THROW(decode<BitString>(cut, reg), FormatError);
  a.push_back(0);
  EXPECT_THROW(decode<BitString>(a, reg), FormatError);
  Bytes huge = encode(uint64_t{1} << 50);
  EXPECT_THROW(decode<std::vector<uint32_t>>(huge, reg), FormatError);
}

TEST(Serial, OtcdCiphertextSurvivesRestore) {
  Rng rng(3);
  auto reg = qsim::QuantumRegister::create(3);
  for (int t = 0; t < 50; ++t) {
    auto key = otcd::keygen(8, 4, rng);
    BitString m = BitString::random(4, rng);
    auto ct = otcd::enc(key, m, reg, rng);
    auto key2 = round_trip(key, reg);
    EXPECT_EQ(key2, key);
    auto reg2 = qsim::QuantumRegister::create(100 + t);
    auto ct2 = round_trip(ct, reg2);
    EXPECT_EQ(otcd::dec(key2, ct2), m);
    auto ct3 = decode<otcd::Ciphertext>(encode(ct), reg2);
    EXPECT_TRUE(otcd::vrfy(key, otcd::del(ct3)));
  }
}

TEST(Serial, CeCiphertextsAndQuantumCertificates) {
  Rng rng(4);
  for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
    ce::Pke pke(8, v, crypto::HashOracle::random(rng));
    auto kp = pke.keygen(rng);
    for (int t = 0; t < 20; ++t) {
      auto reg = qsim::QuantumRegister::create(t);
      BitString m = BitString::random(5, rng);
      auto e = pke.enc(kp.pk, m, reg, rng);
      auto reg2 = qsim::QuantumRegister::create(50 + t);
      auto ct = round_trip(e.ct, reg2);
      auto vk = round_trip(e.vk, reg2);
      EXPECT_EQ(pke.dec(kp.sk, ct), m);
      auto ct2 = decode<ce::Ciphertext>(encode(e.ct), reg2);
      auto cert = ce::del(ct2);
      auto cert2 = round_trip(cert, reg2);
      EXPECT_TRUE(ce::verify(vk, cert2));
    }
  }
}

TEST(Serial, ConsumedHandleRefused) {
  Rng rng(5);
  auto reg = qsim::QuantumRegister::create(5);
  auto key = otcd::keygen(4, 1, rng);
  auto ct = otcd::enc(key, BitString(1), reg, rng);
  otcd::dec(key, ct);
  EXPECT_THROW(encode(ct), ConsumedError);
}

TEST(Serial, GarbledCircuitAndFe) {
  Rng rng(6);
  auto H = crypto::HashOracle::random(rng);
  fe::Fe1 s(8, ce::Variant::kQrom, H, fe::universal::mux(2, 1));
  auto [mpk, msk] = s.setup(rng);
  auto mpk2 = round_trip(mpk, nullptr);
  auto msk2 = round_trip(msk, nullptr);
  BitString f = BitString::from_string("0110");
  auto sk = round_trip(s.keygen(msk2, f), nullptr);
  auto reg = qsim::QuantumRegister::create(6);
  for (uint64_t i = 0; i < 4; ++i) {
    auto e = s.enc(mpk2, BitString::from_uint(i, 2), reg, rng);
    auto reg2 = qsim::QuantumRegister::create(60 + i);
    auto ct = round_trip(e.ct, reg2);
    EXPECT_EQ(s.dec(sk, ct), f.slice(i, 1));
    auto ct2 = decode<fe::Fe1Ciphertext>(encode(e.ct), reg2);
    auto cert = fe::del(ct2);
    auto vk = round_trip(e.vk, reg2);
    EXPECT_TRUE(fe::vrfy(vk, cert));
  }
}

TEST(Serial, FeadAndFeqStructures) {
  Rng rng(7);
  fe::Fead s(8, ce::Variant::kQrom, crypto::HashOracle::random(rng), fe::universal::mux(1, 1));
  auto [mpk, msk] = s.setup(rng);
  round_trip(mpk, nullptr);
  auto sk = round_trip(s.keygen(msk, BitString::from_string("10"), rng), nullptr);
  auto reg = qsim::QuantumRegister::create(7);
  auto e = s.enc(mpk, BitString::from_string("1"), reg, rng);
  auto reg2 = qsim::QuantumRegister::create(70);
  auto vk = round_trip(e.vk, reg2);
  auto ct = round_trip(e.ct, reg2);
  auto cert = fe::del(ct);
  EXPECT_TRUE(fe::vrfy(vk, cert));

  fe::FeqParams p = fe::choose_params(8, 1, 1, 1, fe::FeqConstants{0.125, 2, 0.125, 1}, 3);
  EXPECT_EQ(encode(round_trip(p, nullptr)), encode(p));
  fe::Feq q(p, ce::Variant::kQrom, crypto::HashOracle::random(rng), fe::FeqInner::kNonAdaptive);
  auto [qpk, qmsk] = q.setup(rng);
  round_trip(qpk, nullptr);
  round_trip(qmsk, nullptr);
  field::SparsePolynomial C(1, {{1, {1}}});
  auto qsk = round_trip(q.keygen(qmsk, C, rng), nullptr);
  auto qe = q.enc(qpk, {2}, reg, rng);
  auto qct = round_trip(qe.ct, reg2);
  EXPECT_EQ(q.dec(qsk, qct), 2u);
}

TEST(Artifact, EncodeDecodeAndChecksum) {
  artifact::ArtifactFile a{"otcd.key", Bytes{1, 2, 3, 4}};
  Bytes b = artifact::encode(a);
  auto back = artifact::decode(b);
  EXPECT_EQ(back.kind, a.kind);
  EXPECT_EQ(back.payload, a.payload);
  for (size_t i = 0; i < b.size(); ++i) {
    Bytes bad = b;
    bad[i] ^= 0x01;
    EXPECT_THROW(artifact::decode(bad), FormatError) << i;
  }
  EXPECT_THROW(artifact::decode(Bytes(10)), FormatError);
}

TEST(Artifact, FilesKindsAndConsumption) {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "everlast_artifact_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string path = (dir / "x.eca").string();
  artifact::write(path, {"ce-ske-qrom.ct", Bytes{9, 9}});
  EXPECT_EQ(artifact::read(path, "ce-ske-qrom.ct").payload, (Bytes{9, 9}));
  EXPECT_THROW(artifact::read(path, "ce-ske-qrom.key"), FormatError);
  artifact::consume(path);
  EXPECT_TRUE(fs::exists(path + ".consumed"));
  EXPECT_THROW(artifact::read(path, "ce-ske-qrom.ct"), ConsumedError);
  EXPECT_THROW(artifact::read((dir / "missing.eca").string(), "x"), std::runtime_error);
  fs::remove_all(dir);
}
