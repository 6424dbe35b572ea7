// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Binary serialization of keys, ciphertexts, verification keys and
// certificates. Integers are little-endian; containers carry a u64 length;
// variants a u8 index. Qubit handles are stored as register snapshots and
// restored into the reader's register.

#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "everlast/errors.hpp"
#include "everlast/fe.hpp"
#include "everlast/harness.hpp"

namespace everlast::serial {

class Writer {
 public:
  void u8(uint8_t v) { out_.push_back(v); }
  void u32(uint32_t v);
  void u64(uint64_t v);
  void f64(double v);
  void bytes(const Bytes& b);
  const Bytes& data() const { return out_; }
  Bytes take() && { return std::move(out_); }

 private:
  Bytes out_;
};

class Reader {
 public:
  Reader(const Bytes& in, qsim::RegisterPtr reg) : in_(in), reg_(std::move(reg)) {}
  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  double f64();
  Bytes bytes();
  // Length prefix with a sanity bound against the remaining input.
  size_t count(size_t min_item_bytes = 1);
  const qsim::RegisterPtr& reg() const { return reg_; }
  bool done() const { return pos_ == in_.size(); }
  // Throws FormatError unless all input was consumed.
  void finish() const;

 private:
  void need(size_t n) const;
  const Bytes& in_;
  size_t pos_ = 0;
  qsim::RegisterPtr reg_;
};

// ---- Leaf types ----

void put(Writer& w, bool v);
void get(Reader& r, bool& v);
void put(Writer& w, uint8_t v);
void get(Reader& r, uint8_t& v);
void put(Writer& w, uint32_t v);
void get(Reader& r, uint32_t& v);
void put(Writer& w, uint64_t v);
void get(Reader& r, uint64_t& v);
void put(Writer& w, double v);
void get(Reader& r, double& v);
void put(Writer& w, const Bytes& v);
void get(Reader& r, Bytes& v);
void put(Writer& w, const BitString& v);
void get(Reader& r, BitString& v);
// Throws ConsumedError for a consumed handle.
void put(Writer& w, const qsim::QubitHandle& h);
void get(Reader& r, qsim::QubitHandle& h);

// ---- Containers ----

template <class T>
void put(Writer& w, const std::vector<T>& v);
template <class T>
void get(Reader& r, std::vector<T>& v);
template <class T, size_t N>
void put(Writer& w, const std::array<T, N>& v);
template <class T, size_t N>
void get(Reader& r, std::array<T, N>& v);
template <class T>
void put(Writer& w, const std::optional<T>& v);
template <class T>
void get(Reader& r, std::optional<T>& v);
template <class... Ts>
void put(Writer& w, const std::variant<Ts...>& v);
template <class... Ts>
void get(Reader& r, std::variant<Ts...>& v);

// ---- Module types ----

void put(Writer& w, const crypto::HashOracle& v);
void get(Reader& r, crypto::HashOracle& v);
void put(Writer& w, const crypto::SkeKey& v);
void get(Reader& r, crypto::SkeKey& v);
void put(Writer& w, const crypto::PkePublicKey& v);
void get(Reader& r, crypto::PkePublicKey& v);
void put(Writer& w, const crypto::PkeSecretKey& v);
void get(Reader& r, crypto::PkeSecretKey& v);

void put(Writer& w, const otcd::Key& v);
void get(Reader& r, otcd::Key& v);
void put(Writer& w, const otcd::Ciphertext& v);
void get(Reader& r, otcd::Ciphertext& v);

void put(Writer& w, const ce::CssVk& v);
void get(Reader& r, ce::CssVk& v);
void put(Writer& w, const ce::VkBundle& v);
void get(Reader& r, ce::VkBundle& v);
void put(Writer& w, const ce::CertBundle& v);
void get(Reader& r, ce::CertBundle& v);
void put(Writer& w, const ce::Segment& v);
void get(Reader& r, ce::Segment& v);
void put(Writer& w, const ce::QromCiphertext& v);
void get(Reader& r, ce::QromCiphertext& v);
void put(Writer& w, const ce::CssBlock& v);
void get(Reader& r, ce::CssBlock& v);
void put(Writer& w, const ce::CssCiphertext& v);
void get(Reader& r, ce::CssCiphertext& v);

void put(Writer& w, const garble::Gate& v);
void get(Reader& r, garble::Gate& v);
void put(Writer& w, const garble::Circuit& v);
void get(Reader& r, garble::Circuit& v);
void put(Writer& w, const garble::GarbledRow& v);
void get(Reader& r, garble::GarbledRow& v);
void put(Writer& w, const garble::GarbledGate& v);
void get(Reader& r, garble::GarbledGate& v);
void put(Writer& w, const garble::OutputMap& v);
void get(Reader& r, garble::OutputMap& v);
void put(Writer& w, const garble::GarbledCircuit& v);
void get(Reader& r, garble::GarbledCircuit& v);

void put(Writer& w, const rnce::PublicKey& v);
void get(Reader& r, rnce::PublicKey& v);
void put(Writer& w, const rnce::MasterKey& v);
void get(Reader& r, rnce::MasterKey& v);
void put(Writer& w, const rnce::SecretKey& v);
void get(Reader& r, rnce::SecretKey& v);
void put(Writer& w, const rnce::Ciphertext& v);
void get(Reader& r, rnce::Ciphertext& v);

void put(Writer& w, const fe::Fe1Public& v);
void get(Reader& r, fe::Fe1Public& v);
void put(Writer& w, const fe::Fe1Master& v);
void get(Reader& r, fe::Fe1Master& v);
void put(Writer& w, const fe::Fe1Key& v);
void get(Reader& r, fe::Fe1Key& v);
void put(Writer& w, const fe::Fe1Ciphertext& v);
void get(Reader& r, fe::Fe1Ciphertext& v);
void put(Writer& w, const fe::FeadPublic& v);
void get(Reader& r, fe::FeadPublic& v);
void put(Writer& w, const fe::FeadMaster& v);
void get(Reader& r, fe::FeadMaster& v);
void put(Writer& w, const fe::FeadKey& v);
void get(Reader& r, fe::FeadKey& v);
void put(Writer& w, const fe::FeadCiphertext& v);
void get(Reader& r, fe::FeadCiphertext& v);
void put(Writer& w, const fe::FeadVk& v);
void get(Reader& r, fe::FeadVk& v);
void put(Writer& w, const fe::FeadCert& v);
void get(Reader& r, fe::FeadCert& v);
void put(Writer& w, const fe::FeqParams& v);
void get(Reader& r, fe::FeqParams& v);
void put(Writer& w, const fe::FeqPublic& v);
void get(Reader& r, fe::FeqPublic& v);
void put(Writer& w, const fe::FeqMaster& v);
void get(Reader& r, fe::FeqMaster& v);
void put(Writer& w, const fe::FeqKey& v);
void get(Reader& r, fe::FeqKey& v);
void put(Writer& w, const fe::FeqCiphertext& v);
void get(Reader& r, fe::FeqCiphertext& v);
void put(Writer& w, const fe::FeqCert& v);
void get(Reader& r, fe::FeqCert& v);

void put(Writer& w, const field::Term& v);
void get(Reader& r, field::Term& v);

// One-shot helpers.
template <class T>
Bytes encode(const T& v) {
  Writer w;
  put(w, v);
  return std::move(w).take();
}
template <class T>
T decode(const Bytes& b, const qsim::RegisterPtr& reg) {
  Reader r(b, reg);
  T v;
  get(r, v);
  r.finish();
  return v;
}

// ---- Template definitions ----

template <class T>
void put(Writer& w, const std::vector<T>& v) {
  w.u64(v.size());
  for (const auto& x : v) put(w, x);
}
template <class T>
void get(Reader& r, std::vector<T>& v) {
  size_t n = r.count();
  v.clear();
  v.resize(n);
  for (auto& x : v) get(r, x);
}
template <class T, size_t N>
void put(Writer& w, const std::array<T, N>& v) {
  for (const auto& x : v) put(w, x);
}
template <class T, size_t N>
void get(Reader& r, std::array<T, N>& v) {
  for (auto& x : v) get(r, x);
}
template <class T>
void put(Writer& w, const std::optional<T>& v) {
  w.u8(v.has_value());
  if (v) put(w, *v);
}
template <class T>
void get(Reader& r, std::optional<T>& v) {
  uint8_t has = r.u8();
  if (has > 1) throw FormatError("bad optional flag");
  v.reset();
  if (has) {
    T x;
    get(r, x);
    v = std::move(x);
  }
}

namespace detail {
template <class V, size_t I = 0>
void get_alternative(Reader& r, V& v, size_t index) {
  if constexpr (I < std::variant_size_v<V>) {
    if (index == I) {
      std::variant_alternative_t<I, V> x;
      get(r, x);
      v = std::move(x);
      return;
    }
    get_alternative<V, I + 1>(r, v, index);
  } else {
    throw FormatError("bad variant index");
  }
}
}  // namespace detail

template <class... Ts>
void put(Writer& w, const std::variant<Ts...>& v) {
  w.u8(static_cast<uint8_t>(v.index()));
  std::visit([&](const auto& x) { put(w, x); }, v);
}
template <class... Ts>
void get(Reader& r, std::variant<Ts...>& v) {
  detail::get_alternative(r, v, r.u8());
}

}  // namespace everlast::serial
