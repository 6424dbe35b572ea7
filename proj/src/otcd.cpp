// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/otcd.hpp"

#include <stdexcept>

namespace everlast::otcd {

Key keygen(size_t lambda, size_t n, Rng& rng) {
  if (lambda == 0) throw std::invalid_argument("otcd: lambda must be positive");
  Key k;
  k.lambda = lambda;
  k.n = n;
  k.theta = BitString::random(lambda * n, rng);
  k.z = BitString::random(lambda * n, rng) & k.theta;
  return k;
}

Ciphertext enc_with_pad(const Key& sk, const BitString& m, const BitString& pad,
                        const qsim::RegisterPtr& reg) {
  if (m.size() != sk.n) throw std::invalid_argument("otcd: message length does not match key");
  if (pad.size() != sk.theta.size()) throw std::invalid_argument("otcd: pad length mismatch");
  BitString state = sk.z;
  for (size_t i = 0; i < state.size(); ++i)
    if (!sk.theta[i]) state.set(i, pad[i]);
  Ciphertext ct;
  ct.c = BitString(sk.n);
  for (size_t j = 0; j < sk.n; ++j) {
    BitString block = state.slice(j * sk.lambda, sk.lambda);
    BitString tb = sk.theta.slice(j * sk.lambda, sk.lambda);
    ct.c.set(j, m[j] ^ parity_where_clear(block, tb));
  }
  ct.qubits = qsim::alloc_bb84(reg, state, sk.theta);
  return ct;
}

Ciphertext enc(const Key& sk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) {
  return enc_with_pad(sk, m, BitString::random(sk.theta.size(), rng), reg);
}

BitString dec(const Key& sk, Ciphertext& ct) {
  if (ct.qubits.size() != sk.theta.size() || ct.c.size() != sk.n)
    throw std::invalid_argument("otcd: ciphertext shape does not match key");
  qsim::QuantumRegister& r = ct.qubits.reg();
  BitString m = ct.c;
  for (size_t i = 0; i < sk.theta.size(); ++i) {
    if (sk.theta[i]) continue;
    if (r.measure(ct.qubits.id(i), qsim::Basis::kComputational)) m.flip(i / sk.lambda);
  }
  qsim::discard(ct.qubits);
  return m;
}

Cert del(Ciphertext& ct) { return qsim::measure_all(ct.qubits, qsim::Basis::kHadamard); }

bool vrfy(const Key& sk, const Cert& cert) {
  if (cert.size() != sk.theta.size()) throw std::invalid_argument("otcd: certificate length mismatch");
  return masked_equal(cert, sk.z, sk.theta);
}

Cert modify(const BitString& a, const BitString& b, const Cert& cert) {
  if (a.size() != cert.size() || b.size() != cert.size())
    throw std::invalid_argument("otcd: modify mask length mismatch");
  return cert ^ b;
}

size_t encoded_key_bytes(size_t lambda, size_t n) { return 8 + 2 * ((lambda * n + 7) / 8); }

Bytes encode_key(const Key& k) {
  Bytes out;
  auto put = [&](uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
  };
  put(static_cast<uint32_t>(k.lambda));
  put(static_cast<uint32_t>(k.n));
  Bytes t = k.theta.to_bytes(), z = k.z.to_bytes();
  out.insert(out.end(), t.begin(), t.end());
  out.insert(out.end(), z.begin(), z.end());
  return out;
}

Key decode_key(const Bytes& b) {
  if (b.size() < 8) throw FormatError("otcd key truncated");
  auto get = [&](size_t off) {
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t{b[off + i]} << (8 * i);
    return v;
  };
  Key k;
  k.lambda = get(0);
  k.n = get(4);
  if (k.lambda == 0 || b.size() != encoded_key_bytes(k.lambda, k.n)) throw FormatError("otcd key has wrong length");
  size_t bits = k.lambda * k.n, nb = (bits + 7) / 8;
  k.theta = BitString::from_bytes(Bytes(b.begin() + 8, b.begin() + 8 + nb), bits);
  k.z = BitString::from_bytes(Bytes(b.begin() + 8 + nb, b.end()), bits);
  if (!((k.z & k.theta) == k.z)) throw FormatError("otcd key has check bits outside theta");
  return k;
}

}  // namespace everlast::otcd
