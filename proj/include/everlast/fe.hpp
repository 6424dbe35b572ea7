// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Bounded-collusion functional encryption with certified deletion:
//   Fe1  1-key non-adaptive: garbled U(., m) plus ce-pke encrypted labels.
//   Fead 1-key adaptive: a Pauli-masked Fe1 ciphertext with the mask
//        under RNCE.
//   Feq  q-key for low-degree polynomials: N one-key instances carrying
//        Shamir shares of the input.

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "everlast/garble.hpp"
#include "everlast/rnce.hpp"
#include "everlast/universal.hpp"

namespace everlast::fe {

using universal::Universal;

// ---- Fe1 ----

struct Fe1Public {
  std::vector<std::array<crypto::PkePublicKey, 2>> pk;
};
struct Fe1Master {
  std::vector<std::array<crypto::PkeSecretKey, 2>> sk;
};
struct Fe1Key {
  BitString f;
  std::vector<crypto::PkeSecretKey> sk;  // sk[i] for slot (i, f[i])
};
struct Fe1Ciphertext {
  garble::GarbledCircuit gc;
  std::vector<std::array<ce::Ciphertext, 2>> labels;
};
struct Fe1Encryption {
  ce::VkBundle vk;  // garbled-circuit parts, then labels in (i, alpha) order
  Fe1Ciphertext ct;
};

class Fe1 {
 public:
  // `variant` selects the ce-pke construction protecting the labels; the
  // garbled circuit always uses the QROM ce-ske.
  Fe1(size_t lambda, ce::Variant variant, crypto::HashOracle H, Universal u);
  size_t lambda() const { return garbler_.lambda(); }
  const Universal& universal() const { return u_; }

  std::pair<Fe1Public, Fe1Master> setup(Rng& rng) const;
  Fe1Key keygen(const Fe1Master& msk, const BitString& f) const;
  Fe1Encryption enc(const Fe1Public& mpk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const;
  // Decrypts the f-side labels and evaluates; the rest stays live.
  std::optional<BitString> dec(const Fe1Key& sk, Fe1Ciphertext& ct) const;
  // Total qubits of a ciphertext (depends only on public sizes).
  size_t ciphertext_qubits() const;

 private:
  garble::Scheme garbler_;
  ce::Pke pke_;
  Universal u_;
  size_t label_bits_;
};

ce::CertBundle del(Fe1Ciphertext& ct);
bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert);
ce::Layout layout(const Fe1Ciphertext& ct);
std::vector<qsim::QubitHandle*> segments(Fe1Ciphertext& ct);
// Certificate correction for a ciphertext masked by Z^c X^a, blockwise over
// the layout.
void modify(const ce::Layout& layout, const BitString& a, const BitString& c, ce::CertBundle& cert);

// ---- Fead ----

struct FeadPublic {
  Fe1Public nad;
  rnce::PublicKey nce;
};
struct FeadMaster {
  Fe1Master nad;
  rnce::MasterKey nce;
};
struct FeadKey {
  Fe1Key nad;
  rnce::SecretKey nce;
};
struct FeadCiphertext {
  Fe1Ciphertext psi;  // masked
  rnce::Ciphertext nce;
};
struct FeadVk {
  ce::VkBundle nad;
  ce::VkBundle nce;
  BitString a;
  BitString c;
  ce::Layout layout;
};
struct FeadEncryption {
  FeadVk vk;
  FeadCiphertext ct;
};
struct FeadCert {
  ce::CertBundle nad;
  ce::CertBundle nce;
};

class Fead {
 public:
  Fead(size_t lambda, ce::Variant variant, crypto::HashOracle H, Universal u);
  const Fe1& nad() const { return nad_; }
  const rnce::Scheme& nce() const { return nce_; }

  std::pair<FeadPublic, FeadMaster> setup(Rng& rng) const;
  FeadKey keygen(const FeadMaster& msk, const BitString& f, Rng& rng) const;
  FeadEncryption enc(const FeadPublic& mpk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const;
  // With explicit masks; a = c = 0 leaves the Fe1 ciphertext unmasked.
  FeadEncryption enc_with_mask(const FeadPublic& mpk, const BitString& m, const BitString& a, const BitString& c,
                               const qsim::RegisterPtr& reg, Rng& rng) const;
  std::optional<BitString> dec(const FeadKey& sk, FeadCiphertext& ct) const;
  // Qubits of the masked Fe1 part; the RNCE plaintext is twice this.
  size_t masked_qubits() const { return Q_; }

 private:
  Fe1 nad_;
  rnce::Scheme nce_;
  size_t Q_;
};

FeadCert del(FeadCiphertext& ct);
bool vrfy(const FeadVk& vk, FeadCert& cert);

// ---- Feq ----

struct FeqConstants {
  double ct = 1, cN = 1, cv = 1, cS = 1;
};

struct FeqParams {
  size_t lambda = 0, q = 0, D = 0, ell = 0;
  size_t t = 0, N = 0, v = 0, S = 0;
  uint64_t p = 0;
  FeqConstants constants;
};

// t = ceil(ct q^2 lambda), N = ceil(cN D^2 q^2 t), v = ceil(cv lambda),
// S = ceil(cS v q^2); p = 257 unless N >= 257, then the smallest prime
// above N (or p_override, which must be a prime above N). Throws
// std::invalid_argument when tD + 1 > N or v > S.
FeqParams choose_params(size_t lambda, size_t q, size_t D, size_t ell, const FeqConstants& c,
                        uint64_t p_override = 0);

enum class FeqInner : uint8_t { kAdaptive, kNonAdaptive };

#ifndef EVERLAST_FEQ_DEFAULT_INNER
#define EVERLAST_FEQ_DEFAULT_INNER kAdaptive
#endif
inline constexpr FeqInner kDefaultFeqInner = FeqInner::EVERLAST_FEQ_DEFAULT_INNER;

using InnerPublic = std::variant<Fe1Public, FeadPublic>;
using InnerMaster = std::variant<Fe1Master, FeadMaster>;
using InnerKey = std::variant<Fe1Key, FeadKey>;
using InnerCiphertext = std::variant<Fe1Ciphertext, FeadCiphertext>;
using InnerVk = std::variant<ce::VkBundle, FeadVk>;
using InnerCert = std::variant<ce::CertBundle, FeadCert>;

struct FeqPublic {
  std::vector<InnerPublic> inst;
};
struct FeqMaster {
  std::vector<InnerMaster> inst;
};
struct FeqKey {
  std::vector<uint32_t> gamma;  // 1-based instance indices, ascending
  std::vector<uint32_t> delta;  // 0-based indices into [S], ascending
  std::vector<InnerKey> keys;   // one per gamma entry
};
struct FeqCiphertext {
  std::vector<InnerCiphertext> inst;
};
struct FeqEncryption {
  std::vector<InnerVk> vk;
  FeqCiphertext ct;
};
struct FeqCert {
  std::vector<InnerCert> inst;
};

class Feq {
 public:
  Feq(const FeqParams& params, ce::Variant variant, crypto::HashOracle H, FeqInner inner = kDefaultFeqInner);
  const FeqParams& params() const { return params_; }
  const field::Field& field() const { return shape_.field; }
  const universal::LinearShape& shape() const { return shape_; }
  FeqInner inner() const { return inner_; }

  std::pair<FeqPublic, FeqMaster> setup(Rng& rng) const;
  // C must have ell variables and total degree <= D.
  FeqKey keygen(const FeqMaster& msk, const field::SparsePolynomial& C, Rng& rng) const;
  FeqEncryption enc(const FeqPublic& mpk, const std::vector<uint64_t>& x, const qsim::RegisterPtr& reg,
                    Rng& rng) const;
  // Share vectors used by enc: row i-1 holds (mu_1(i)..mu_ell(i), xi_1(i)..xi_S(i)).
  std::vector<std::vector<uint64_t>> shares(const std::vector<uint64_t>& x, Rng& rng) const;
  std::optional<uint64_t> dec(const FeqKey& sk, FeqCiphertext& ct) const;

 private:
  FeqParams params_;
  FeqInner inner_;
  universal::LinearShape shape_;
  std::variant<Fe1, Fead> one_;
};

FeqCert del(FeqCiphertext& ct);
bool vrfy(const std::vector<InnerVk>& vk, FeqCert& cert);

}  // namespace everlast::fe
