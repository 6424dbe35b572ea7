// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// One-time SKE with certified deletion from BB84 states. Message bit j is
// carried by a block of lambda qubits |z_j>_{theta_j}; the classical part
// is c_j = m_j xor (parity of the block's theta=0 bits).

#pragma once

#include "everlast/bits.hpp"
#include "everlast/qsim.hpp"

namespace everlast::otcd {

// theta and the check bits z (meaningful on theta=1 positions, zero
// elsewhere); blocks are concatenated, n blocks of lambda bits.
struct Key {
  size_t lambda = 0;
  size_t n = 0;
  BitString theta;
  BitString z;
  friend bool operator==(const Key&, const Key&) = default;
};

struct Ciphertext {
  qsim::QubitHandle qubits;
  BitString c;
};

using Cert = BitString;

Key keygen(size_t lambda, size_t n, Rng& rng);
// Draws the theta=0 data bits freshly; they never enter the key.
Ciphertext enc(const Key& sk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng);
// Same with explicit data bits (read at theta=0 positions only).
Ciphertext enc_with_pad(const Key& sk, const BitString& m, const BitString& pad,
                        const qsim::RegisterPtr& reg);
// Measures the theta=0 positions, discards the rest; consumes ct.
BitString dec(const Key& sk, Ciphertext& ct);
// Hadamard-basis measurement of every qubit; consumes ct.
Cert del(Ciphertext& ct);
bool vrfy(const Key& sk, const Cert& cert);
// Correction for a certificate taken from Z^b X^a ct: cert xor b.
Cert modify(const BitString& a, const BitString& b, const Cert& cert);

// Length-prefixed packing: u32 lambda | u32 n | theta bytes | z bytes.
Bytes encode_key(const Key& k);
Key decode_key(const Bytes& b);
size_t encoded_key_bytes(size_t lambda, size_t n);

}  // namespace everlast::otcd
