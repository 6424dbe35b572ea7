// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Receiver non-committing encryption with certified deletion, from 2n
// ce-pke instances: bit i is encrypted under both pk_{i,0} and pk_{i,1},
// and a secret key holds one of the two secret keys per position.

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "everlast/ce.hpp"

namespace everlast::rnce {

struct PublicKey {
  std::vector<std::array<crypto::PkePublicKey, 2>> pk;
};
struct MasterKey {
  std::vector<std::array<crypto::PkeSecretKey, 2>> sk;
};
struct SecretKey {
  BitString x;
  std::vector<crypto::PkeSecretKey> sk;  // sk[i] = msk.sk[i][x[i]]
};
struct Ciphertext {
  std::vector<std::array<ce::Ciphertext, 2>> ct;
};
struct Encryption {
  ce::VkBundle vk;  // ordered (i, alpha)
  Ciphertext ct;
};

class Scheme {
 public:
  Scheme(size_t lambda, ce::Variant variant, crypto::HashOracle H);
  const ce::Pke& pke() const { return pke_; }

  std::pair<PublicKey, MasterKey> setup(size_t n, Rng& rng) const;
  SecretKey keygen(const MasterKey& msk, Rng& rng) const;
  Encryption enc(const PublicKey& pk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const;
  // Decrypts the x[i] side of every position; the other side stays live.
  std::optional<BitString> dec(const SecretKey& sk, Ciphertext& ct) const;
  // Position i: the x*[i] side encrypts 0 and the other side 1. Returns x*.
  std::pair<Encryption, BitString> fake(const PublicKey& pk, const qsim::RegisterPtr& reg, Rng& rng) const;
  // Selector x* xor m. A mismatched aux is not detected.
  SecretKey reveal(const PublicKey& pk, const MasterKey& msk, const BitString& aux, const BitString& m) const;

  // Qubits of an n-bit ciphertext.
  size_t ciphertext_qubits(size_t n) const { return 2 * pke_.ciphertext_qubits(n); }

 private:
  ce::Pke pke_;
};

// Deletes all 2n ciphertexts; throws ConsumedError if any was decrypted.
ce::CertBundle del(Ciphertext& ct);
bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert);
ce::Layout layout(const Ciphertext& ct);
std::vector<qsim::QubitHandle*> segments(Ciphertext& ct);

}  // namespace everlast::rnce
