// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/crypto.hpp"

#include <sodium.h>

#include <array>
#include <stdexcept>

#include "everlast/bits.hpp"

namespace everlast::crypto {
namespace {

struct SodiumInit {
  SodiumInit() {
    if (sodium_init() < 0) throw std::runtime_error("libsodium initialization failed");
  }
};

void ensure_sodium() { static SodiumInit init; }

void put_len(crypto_generichash_state* st, uint64_t n) {
  uint8_t b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(n >> (8 * i));
  crypto_generichash_update(st, b, 8);
}

Bytes u64_bytes(uint64_t v) {
  Bytes b(8);
  for (int i = 0; i < 8; ++i) b[i] = static_cast<uint8_t>(v >> (8 * i));
  return b;
}

uint64_t bytes_u64(const uint8_t* p) {
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{p[i]} << (8 * i);
  return v;
}

// Montgomery arithmetic modulo the fixed prime.
struct Mont {
  static constexpr uint64_t n = kPkePrime;
  uint64_t ninv;  // -n^{-1} mod 2^64
  uint64_t r2;    // 2^128 mod n

  Mont() {
    uint64_t inv = 1;
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
    ninv = ~inv + 1;
    unsigned __int128 r = (static_cast<unsigned __int128>(1) << 64) % n;
    r2 = static_cast<uint64_t>((r * r) % n);
  }
  uint64_t redc(unsigned __int128 t) const {
    uint64_t m = static_cast<uint64_t>(t) * ninv;
    unsigned __int128 u = (t + static_cast<unsigned __int128>(m) * n) >> 64;
    uint64_t r = static_cast<uint64_t>(u);
    return r >= n ? r - n : r;
  }
  uint64_t mul(uint64_t a, uint64_t b) const { return redc(static_cast<unsigned __int128>(a) * b); }
  uint64_t to(uint64_t a) const { return mul(a % n, r2); }
  uint64_t from(uint64_t a) const { return redc(a); }
};

const Mont& mont() {
  static const Mont m;
  return m;
}

// g^(d * 256^j) in Montgomery form for every byte position j and digit d.
struct GeneratorTable {
  std::array<std::array<uint64_t, 256>, 8> t;
  GeneratorTable() {
    const Mont& M = mont();
    uint64_t base = M.to(kPkeGenerator);
    for (auto& row : t) {
      row[0] = M.to(1);
      for (size_t d = 1; d < 256; ++d) row[d] = M.mul(row[d - 1], base);
      base = M.mul(row[255], base);
    }
  }
};

uint64_t generator_pow(uint64_t exp) {
  static const GeneratorTable g;
  const Mont& M = mont();
  uint64_t r = g.t[0][exp & 0xff];
  for (size_t j = 1; j < 8; ++j) r = M.mul(r, g.t[j][(exp >> (8 * j)) & 0xff]);
  return M.from(r);
}

}  // namespace

Bytes derive(std::string_view domain, const Bytes& key, const Bytes& input, size_t out_len) {
  ensure_sodium();
  crypto_generichash_state st;
  crypto_generichash_init(&st, nullptr, 0, 32);
  put_len(&st, domain.size());
  crypto_generichash_update(&st, reinterpret_cast<const uint8_t*>(domain.data()), domain.size());
  put_len(&st, key.size());
  crypto_generichash_update(&st, key.data(), key.size());
  put_len(&st, input.size());
  crypto_generichash_update(&st, input.data(), input.size());
  put_len(&st, out_len);
  uint8_t seed[32];
  crypto_generichash_final(&st, seed, 32);
  Bytes out(out_len);
  if (out_len > 0) {
    static const uint8_t nonce[crypto_stream_chacha20_NONCEBYTES] = {0};
    crypto_stream_chacha20(out.data(), out_len, nonce, seed);
  }
  return out;
}

Bytes prg_expand(const Bytes& seed, size_t out_len) { return derive("everlast.prg", seed, {}, out_len); }

Bytes prf_eval(const Bytes& key, const Bytes& input, size_t out_len) {
  return derive("everlast.prf", key, input, out_len);
}

Bytes HashOracle::query(const Bytes& input, size_t out_len) const {
  return derive("everlast.hash", seed_, input, out_len);
}

size_t ske_key_bytes(size_t lambda) { return (lambda + 7) / 8 + kTagBytes; }

SkeKey ske_keygen(size_t lambda, Rng& rng) {
  SkeKey k;
  k.enc = rng.bytes((lambda + 7) / 8);
  k.tag = rng.bytes(kTagBytes);
  return k;
}

Bytes ske_key_encode(const SkeKey& k) {
  Bytes b = k.enc;
  b.insert(b.end(), k.tag.begin(), k.tag.end());
  return b;
}

SkeKey ske_key_decode(const Bytes& b, size_t lambda) {
  if (b.size() != ske_key_bytes(lambda)) throw std::invalid_argument("ske key has wrong length");
  size_t e = (lambda + 7) / 8;
  return SkeKey{Bytes(b.begin(), b.begin() + e), Bytes(b.begin() + e, b.end())};
}

Bytes ske_enc(const SkeKey& k, const Bytes& m, Rng& rng) {
  Bytes nonce = rng.bytes(kNonceBytes);
  Bytes body = xor_bytes(m, derive("everlast.ske.stream", k.enc, nonce, m.size()));
  Bytes ct = nonce;
  ct.insert(ct.end(), body.begin(), body.end());
  Bytes tag = derive("everlast.ske.tag", k.tag, ct, kTagBytes);
  ct.insert(ct.end(), tag.begin(), tag.end());
  return ct;
}

std::optional<Bytes> ske_dec(const SkeKey& k, const Bytes& ct) {
  if (ct.size() < kNonceBytes + kTagBytes) return std::nullopt;
  Bytes head(ct.begin(), ct.end() - kTagBytes);
  Bytes tag(ct.end() - kTagBytes, ct.end());
  if (derive("everlast.ske.tag", k.tag, head, kTagBytes) != tag) return std::nullopt;
  Bytes nonce(ct.begin(), ct.begin() + kNonceBytes);
  Bytes body(ct.begin() + kNonceBytes, ct.end() - kTagBytes);
  return xor_bytes(body, derive("everlast.ske.stream", k.enc, nonce, body.size()));
}

uint64_t modpow(uint64_t base, uint64_t exp) {
  const Mont& M = mont();
  uint64_t result = M.to(1);
  uint64_t b = M.to(base);
  while (exp) {
    if (exp & 1) result = M.mul(result, b);
    b = M.mul(b, b);
    exp >>= 1;
  }
  return M.from(result);
}

PkeKeyPair pke_keygen(Rng& rng) {
  uint64_t x = 1 + rng.below(kPkeOrder - 1);
  return {PkePublicKey{generator_pow(x)}, PkeSecretKey{x}};
}

Bytes pke_enc(const PkePublicKey& pk, const Bytes& m, Rng& rng) {
  uint64_t r = 1 + rng.below(kPkeOrder - 1);
  Bytes c1 = u64_bytes(generator_pow(r));
  Bytes shared = u64_bytes(modpow(pk.y, r));
  Bytes ct = c1;
  Bytes body = xor_bytes(m, derive("everlast.pke.stream", shared, c1, m.size()));
  ct.insert(ct.end(), body.begin(), body.end());
  Bytes tag = derive("everlast.pke.tag", shared, ct, kTagBytes);
  ct.insert(ct.end(), tag.begin(), tag.end());
  return ct;
}

std::optional<Bytes> pke_dec(const PkeSecretKey& sk, const Bytes& ct) {
  if (ct.size() < 8 + kTagBytes) return std::nullopt;
  uint64_t c1v = bytes_u64(ct.data());
  if (c1v == 0 || c1v >= kPkePrime) return std::nullopt;
  Bytes c1(ct.begin(), ct.begin() + 8);
  Bytes shared = u64_bytes(modpow(c1v, sk.x));
  Bytes head(ct.begin(), ct.end() - kTagBytes);
  Bytes tag(ct.end() - kTagBytes, ct.end());
  if (derive("everlast.pke.tag", shared, head, kTagBytes) != tag) return std::nullopt;
  Bytes body(ct.begin() + 8, ct.end() - kTagBytes);
  return xor_bytes(body, derive("everlast.pke.stream", shared, c1, body.size()));
}

}  // namespace everlast::crypto
