// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/rnce.hpp"

#include <stdexcept>

namespace everlast::rnce {
namespace {

const BitString& bit(bool b) {
  static const BitString zero = BitString::from_string("0"), one = BitString::from_string("1");
  return b ? one : zero;
}

void take(ce::Encryption&& e, ce::VkBundle& vk, ce::Ciphertext& slot) {
  vk.append(std::move(e.vk));
  slot = std::move(e.ct);
}

}  // namespace

Scheme::Scheme(size_t lambda, ce::Variant variant, crypto::HashOracle H) : pke_(lambda, variant, std::move(H)) {}

std::pair<PublicKey, MasterKey> Scheme::setup(size_t n, Rng& rng) const {
  PublicKey pk;
  MasterKey msk;
  pk.pk.resize(n);
  msk.sk.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a) {
      auto kp = pke_.keygen(rng);
      pk.pk[i][a] = kp.pk;
      msk.sk[i][a] = kp.sk;
    }
  return {std::move(pk), std::move(msk)};
}

SecretKey Scheme::keygen(const MasterKey& msk, Rng& rng) const {
  SecretKey sk;
  sk.x = BitString::random(msk.sk.size(), rng);
  for (size_t i = 0; i < msk.sk.size(); ++i) sk.sk.push_back(msk.sk[i][sk.x[i]]);
  return sk;
}

Encryption Scheme::enc(const PublicKey& pk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const {
  if (m.size() != pk.pk.size()) throw std::invalid_argument("rnce: message length does not match key");
  Encryption out;
  out.ct.ct.resize(m.size());
  for (size_t i = 0; i < m.size(); ++i)
    for (int a = 0; a < 2; ++a) take(pke_.enc(pk.pk[i][a], bit(m[i]), reg, rng), out.vk, out.ct.ct[i][a]);
  return out;
}

std::optional<BitString> Scheme::dec(const SecretKey& sk, Ciphertext& ct) const {
  if (sk.x.size() != ct.ct.size() || sk.sk.size() != ct.ct.size())
    throw std::invalid_argument("rnce: key length does not match ciphertext");
  BitString m(ct.ct.size());
  for (size_t i = 0; i < ct.ct.size(); ++i) {
    auto b = pke_.dec(sk.sk[i], ct.ct[i][sk.x[i]]);
    if (!b || b->size() != 1) return std::nullopt;
    m.set(i, (*b)[0]);
  }
  return m;
}

std::pair<Encryption, BitString> Scheme::fake(const PublicKey& pk, const qsim::RegisterPtr& reg, Rng& rng) const {
  size_t n = pk.pk.size();
  BitString xs = BitString::random(n, rng);
  Encryption out;
  out.ct.ct.resize(n);
  for (size_t i = 0; i < n; ++i)
    for (int a = 0; a < 2; ++a) {
      bool plain = static_cast<bool>(a) != xs[i];  // side x*[i] gets 0
      take(pke_.enc(pk.pk[i][a], bit(plain), reg, rng), out.vk, out.ct.ct[i][a]);
    }
  return {std::move(out), std::move(xs)};
}

SecretKey Scheme::reveal(const PublicKey& pk, const MasterKey& msk, const BitString& aux, const BitString& m) const {
  if (aux.size() != pk.pk.size() || m.size() != aux.size() || msk.sk.size() != aux.size())
    throw std::invalid_argument("rnce: reveal length mismatch");
  SecretKey sk;
  sk.x = aux ^ m;
  for (size_t i = 0; i < aux.size(); ++i) sk.sk.push_back(msk.sk[i][sk.x[i]]);
  return sk;
}

ce::CertBundle del(Ciphertext& ct) {
  for (auto& p : ct.ct)
    for (auto& c : p)
      if (ce::is_consumed(c)) throw ConsumedError("rnce: ciphertext was decrypted");
  ce::CertBundle out;
  for (auto& p : ct.ct)
    for (auto& c : p) out.append(ce::del(c));
  return out;
}

bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert) { return ce::verify(vk, cert); }

ce::Layout layout(const Ciphertext& ct) {
  ce::Layout l;
  for (const auto& p : ct.ct)
    for (const auto& c : p) ce::append_layout(l, ce::layout(c));
  return l;
}

std::vector<qsim::QubitHandle*> segments(Ciphertext& ct) {
  std::vector<qsim::QubitHandle*> s;
  for (auto& p : ct.ct)
    for (auto& c : p) {
      auto part = ce::segments(c);
      s.insert(s.end(), part.begin(), part.end());
    }
  return s;
}

}  // namespace everlast::rnce
