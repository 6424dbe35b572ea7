// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Certified everlasting SKE and PKE in two flavours:
//   QROM: h = H(R) xor encode(otcd key), R under the classical scheme,
//         message under otcd.
//   CSS:  per message bit a (p+q)-qubit product state built from a CSS
//         coset, with the basis/permutation/check data under the
//         classical scheme and a quantum deletion certificate.
//
// Composite schemes (garbling, RNCE, FE) collect verification keys and
// certificates as flat bundles of parts; part i of a certificate always
// pairs with part i of the verification key and with segment i of the
// ciphertext's qubit layout.

#pragma once

#include <functional>
#include <optional>
#include <variant>
#include <vector>

#include "everlast/codes.hpp"
#include "everlast/crypto.hpp"
#include "everlast/otcd.hpp"
#include "everlast/qsim.hpp"

namespace everlast::ce {

enum class Variant : uint8_t { kQrom = 0, kCss = 1 };
const char* variant_name(Variant v);

struct CssVk {
  BitString B;
  std::vector<uint32_t> Q;
  BitString r;
  friend bool operator==(const CssVk&, const CssVk&) = default;
};

using VkPart = std::variant<otcd::Key, CssVk>;
using CertPart = std::variant<otcd::Cert, qsim::QubitHandle>;

struct VkBundle {
  std::vector<VkPart> parts;
  void append(VkBundle&& o);
};

struct CertBundle {
  std::vector<CertPart> parts;
  void append(CertBundle&& o);
};

// Checks one certificate part; quantum parts are consumed.
bool verify_part(const VkPart& vk, CertPart& cert);
// Conjunction over all parts. Every quantum part is consumed even after a
// failure so verification always has the same effect on the state.
bool verify(const VkBundle& vk, CertBundle& cert);

struct Segment {
  uint32_t qubits;
  bool quantum_cert;
  friend bool operator==(const Segment&, const Segment&) = default;
};
using Layout = std::vector<Segment>;
size_t layout_qubits(const Layout& l);
void append_layout(Layout& dst, const Layout& src);

// Applies Z^c X^a across the segments (mask bit i goes to the i-th qubit
// in segment order).
void mask(const std::vector<qsim::QubitHandle*>& segs, const BitString& a, const BitString& c);
// Exact inverse of mask.
void unmask(const std::vector<qsim::QubitHandle*>& segs, const BitString& a, const BitString& c);
// Turns a certificate taken from a masked ciphertext into one for the
// unmasked verification key: XOR by the c-mask on classical parts, the
// inverse Pauli X^a Z^c on quantum parts.
void modify(const Layout& layout, const BitString& a, const BitString& c, CertBundle& cert);

struct CssParams {
  codes::CssPair pair = codes::CssPair::hamming7();
  size_t p = 7;  // check qubits per block
};

struct QromCiphertext {
  Bytes h;
  Bytes classical;
  otcd::Ciphertext body;
};

struct CssBlock {
  qsim::QubitHandle psi;
  Bytes classical;
  BitString u;
  BitString h;
};

struct CssCiphertext {
  std::vector<CssBlock> blocks;
};

using Ciphertext = std::variant<QromCiphertext, CssCiphertext>;

struct Encryption {
  VkBundle vk;
  Ciphertext ct;
};

Layout layout(const Ciphertext& ct);
std::vector<qsim::QubitHandle*> segments(Ciphertext& ct);
// Deletes every block; consumes ct.
CertBundle del(Ciphertext& ct);
bool is_consumed(const Ciphertext& ct);

// Shared machinery; Ske and Pke differ only in how R / the CSS block data
// is protected classically.
class Scheme {
 public:
  Scheme(size_t lambda, Variant variant, crypto::HashOracle H, CssParams css = {});
  size_t lambda() const { return lambda_; }
  Variant variant() const { return variant_; }
  const crypto::HashOracle& oracle() const { return H_; }
  const CssParams& css() const { return css_; }
  // Qubits used to encrypt an n-bit message.
  size_t ciphertext_qubits(size_t n) const;
  Layout message_layout(size_t n) const;

 protected:
  using ClassicalEnc = std::function<Bytes(const Bytes&)>;
  using ClassicalDec = std::function<std::optional<Bytes>(const Bytes&)>;

  QromCiphertext qrom_enc(const BitString& m, const ClassicalEnc& cenc, const qsim::RegisterPtr& reg,
                          Rng& rng, otcd::Key* vk) const;
  std::optional<otcd::Key> qrom_unlock(const QromCiphertext& ct, const ClassicalDec& cdec) const;
  Encryption enc_impl(const BitString& m, const ClassicalEnc& cenc, const qsim::RegisterPtr& reg,
                      Rng& rng) const;
  std::optional<BitString> dec_impl(Ciphertext& ct, const ClassicalDec& cdec) const;

  size_t lambda_;
  Variant variant_;
  crypto::HashOracle H_;
  CssParams css_;
};

class Ske : public Scheme {
 public:
  using Scheme::Scheme;
  crypto::SkeKey keygen(Rng& rng) const { return crypto::ske_keygen(lambda_, rng); }
  Encryption enc(const crypto::SkeKey& sk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const;
  // Returns nullopt when the classical layer rejects; qubits are only
  // touched after the classical layer accepted.
  std::optional<BitString> dec(const crypto::SkeKey& sk, Ciphertext& ct) const;

  // QROM building blocks used by garbling, where rows are probed with the
  // classical layer before any measurement.
  QromCiphertext enc_qrom(const crypto::SkeKey& sk, const BitString& m, const qsim::RegisterPtr& reg,
                          Rng& rng, otcd::Key* vk) const;
  std::optional<otcd::Key> unlock(const crypto::SkeKey& sk, const QromCiphertext& ct) const;
};

class Pke : public Scheme {
 public:
  using Scheme::Scheme;
  crypto::PkeKeyPair keygen(Rng& rng) const { return crypto::pke_keygen(rng); }
  Encryption enc(const crypto::PkePublicKey& pk, const BitString& m, const qsim::RegisterPtr& reg,
                 Rng& rng) const;
  std::optional<BitString> dec(const crypto::PkeSecretKey& sk, Ciphertext& ct) const;
};

}  // namespace everlast::ce
