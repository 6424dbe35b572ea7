// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Classical primitives: PRG, PRF, a classically-queried hash oracle, SKE
// with a key-confirmation tag, and a toy public-key scheme.
//
// None of this is meant to be secure; it exists so the quantum protocols
// above it have exactly-correct classical components.

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "everlast/rng.hpp"

namespace everlast::crypto {

// Domain-separated expansion: BLAKE2b-256 over (domain, key, input)
// seeds a ChaCha20 keystream of out_len bytes.
Bytes derive(std::string_view domain, const Bytes& key, const Bytes& input, size_t out_len);

Bytes prg_expand(const Bytes& seed, size_t out_len);
Bytes prf_eval(const Bytes& key, const Bytes& input, size_t out_len = 32);

// Random oracle with classical queries. Entries are a deterministic
// function of the seed, so the table is materialized implicitly.
class HashOracle {
 public:
  HashOracle() = default;
  explicit HashOracle(Bytes seed) : seed_(std::move(seed)) {}
  static HashOracle random(Rng& rng) { return HashOracle(rng.bytes(32)); }
  Bytes query(const Bytes& input, size_t out_len) const;
  const Bytes& seed() const { return seed_; }

 private:
  Bytes seed_ = Bytes(32, 0);
};

inline constexpr size_t kTagBytes = 8;
inline constexpr size_t kNonceBytes = 16;

// Keystream key of ceil(lambda/8) bytes plus a 64-bit tag key.
struct SkeKey {
  Bytes enc;
  Bytes tag;
  friend bool operator==(const SkeKey&, const SkeKey&) = default;
};

size_t ske_key_bytes(size_t lambda);
SkeKey ske_keygen(size_t lambda, Rng& rng);
// Packed encoding enc || tag; every byte string of the right length is a key.
Bytes ske_key_encode(const SkeKey& k);
SkeKey ske_key_decode(const Bytes& b, size_t lambda);
// nonce || (m xor stream) || tag
Bytes ske_enc(const SkeKey& k, const Bytes& m, Rng& rng);
std::optional<Bytes> ske_dec(const SkeKey& k, const Bytes& ct);

// Hybrid ElGamal in the quadratic-residue subgroup of a 62-bit safe prime.
struct PkePublicKey {
  uint64_t y = 0;
  friend bool operator==(const PkePublicKey&, const PkePublicKey&) = default;
};
struct PkeSecretKey {
  uint64_t x = 0;
  friend bool operator==(const PkeSecretKey&, const PkeSecretKey&) = default;
};
struct PkeKeyPair {
  PkePublicKey pk;
  PkeSecretKey sk;
};

inline constexpr uint64_t kPkePrime = 0x3fffffffffffd6bbULL;  // P = 2Q + 1
inline constexpr uint64_t kPkeOrder = (kPkePrime - 1) / 2;     // Q
inline constexpr uint64_t kPkeGenerator = 4;

uint64_t modpow(uint64_t base, uint64_t exp);
PkeKeyPair pke_keygen(Rng& rng);
// c1 (8 bytes) || (m xor stream) || tag
Bytes pke_enc(const PkePublicKey& pk, const Bytes& m, Rng& rng);
std::optional<Bytes> pke_dec(const PkeSecretKey& sk, const Bytes& ct);

}  // namespace everlast::crypto
