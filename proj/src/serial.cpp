// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/serial.hpp"

#include <cstring>

namespace everlast::serial {

void Writer::u32(uint32_t v) {
  for (int i = 0; i < 4; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void Writer::u64(uint64_t v) {
  for (int i = 0; i < 8; ++i) out_.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void Writer::f64(double v) {
  uint64_t u;
  std::memcpy(&u, &v, 8);
  u64(u);
}

void Writer::bytes(const Bytes& b) {
  u64(b.size());
  out_.insert(out_.end(), b.begin(), b.end());
}

void Reader::need(size_t n) const {
  if (n > in_.size() - pos_) throw FormatError("serialized data truncated");
}

uint8_t Reader::u8() {
  need(1);
  return in_[pos_++];
}

uint32_t Reader::u32() {
  need(4);
  uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= uint32_t{in_[pos_ + i]} << (8 * i);
  pos_ += 4;
  return v;
}

uint64_t Reader::u64() {
  need(8);
  uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= uint64_t{in_[pos_ + i]} << (8 * i);
  pos_ += 8;
  return v;
}

double Reader::f64() {
  uint64_t u = u64();
  double v;
  std::memcpy(&v, &u, 8);
  return v;
}

Bytes Reader::bytes() {
  size_t n = count();
  Bytes out(in_.begin() + static_cast<long>(pos_), in_.begin() + static_cast<long>(pos_ + n));
  pos_ += n;
  return out;
}

size_t Reader::count(size_t min_item_bytes) {
  uint64_t n = u64();
  if (min_item_bytes > 0 && n > (in_.size() - pos_) / min_item_bytes) throw FormatError("length prefix too large");
  return static_cast<size_t>(n);
}

void Reader::finish() const {
  if (!done()) throw FormatError("trailing bytes after serialized value");
}

// ---- Leaves ----

void put(Writer& w, bool v) { w.u8(v); }
void get(Reader& r, bool& v) {
  uint8_t b = r.u8();
  if (b > 1) throw FormatError("bad boolean");
  v = b;
}
void put(Writer& w, uint8_t v) { w.u8(v); }
void get(Reader& r, uint8_t& v) { v = r.u8(); }
void put(Writer& w, uint32_t v) { w.u32(v); }
void get(Reader& r, uint32_t& v) { v = r.u32(); }
void put(Writer& w, uint64_t v) { w.u64(v); }
void get(Reader& r, uint64_t& v) { v = r.u64(); }
void put(Writer& w, double v) { w.f64(v); }
void get(Reader& r, double& v) { v = r.f64(); }
void put(Writer& w, const Bytes& v) { w.bytes(v); }
void get(Reader& r, Bytes& v) { v = r.bytes(); }

void put(Writer& w, const BitString& v) {
  w.u64(v.size());
  Bytes b = v.to_bytes();
  for (uint8_t x : b) w.u8(x);
}

void get(Reader& r, BitString& v) {
  uint64_t n = r.u64();
  if (n > (uint64_t{1} << 40)) throw FormatError("bit string too long");
  size_t nbytes = static_cast<size_t>((n + 7) / 8);
  Bytes b(nbytes);
  for (auto& x : b) x = r.u8();
  v = BitString::from_bytes(b, static_cast<size_t>(n));
  if (v.to_bytes() != b) throw FormatError("bit string has nonzero padding");
}

void put(Writer& w, const qsim::QubitHandle& h) {
  if (!h.valid()) throw ConsumedError("cannot serialize a consumed qubit handle");
  w.bytes(qsim::snapshot(h));
}

void get(Reader& r, qsim::QubitHandle& h) { h = qsim::restore(r.reg(), r.bytes()); }

// ---- Crypto ----

void put(Writer& w, const crypto::HashOracle& v) { w.bytes(v.seed()); }
void get(Reader& r, crypto::HashOracle& v) { v = crypto::HashOracle(r.bytes()); }
void put(Writer& w, const crypto::SkeKey& v) {
  w.bytes(v.enc);
  w.bytes(v.tag);
}
void get(Reader& r, crypto::SkeKey& v) {
  v.enc = r.bytes();
  v.tag = r.bytes();
  if (v.tag.size() != crypto::kTagBytes) throw FormatError("bad ske tag key length");
}
void put(Writer& w, const crypto::PkePublicKey& v) { w.u64(v.y); }
void get(Reader& r, crypto::PkePublicKey& v) {
  v.y = r.u64();
  if (v.y == 0 || v.y >= crypto::kPkePrime) throw FormatError("pke public key out of range");
}
void put(Writer& w, const crypto::PkeSecretKey& v) { w.u64(v.x); }
void get(Reader& r, crypto::PkeSecretKey& v) {
  v.x = r.u64();
  if (v.x >= crypto::kPkeOrder) throw FormatError("pke secret key out of range");
}

// ---- otcd ----

void put(Writer& w, const otcd::Key& v) { w.bytes(otcd::encode_key(v)); }
void get(Reader& r, otcd::Key& v) { v = otcd::decode_key(r.bytes()); }
void put(Writer& w, const otcd::Ciphertext& v) {
  put(w, v.qubits);
  put(w, v.c);
}
void get(Reader& r, otcd::Ciphertext& v) {
  get(r, v.qubits);
  get(r, v.c);
}

// ---- ce ----

void put(Writer& w, const ce::CssVk& v) {
  put(w, v.B);
  put(w, v.Q);
  put(w, v.r);
}
void get(Reader& r, ce::CssVk& v) {
  get(r, v.B);
  get(r, v.Q);
  get(r, v.r);
}
void put(Writer& w, const ce::VkBundle& v) { put(w, v.parts); }
void get(Reader& r, ce::VkBundle& v) { get(r, v.parts); }
void put(Writer& w, const ce::CertBundle& v) { put(w, v.parts); }
void get(Reader& r, ce::CertBundle& v) { get(r, v.parts); }
void put(Writer& w, const ce::Segment& v) {
  w.u32(v.qubits);
  put(w, v.quantum_cert);
}
void get(Reader& r, ce::Segment& v) {
  v.qubits = r.u32();
  get(r, v.quantum_cert);
}
void put(Writer& w, const ce::QromCiphertext& v) {
  w.bytes(v.h);
  w.bytes(v.classical);
  put(w, v.body);
}
void get(Reader& r, ce::QromCiphertext& v) {
  v.h = r.bytes();
  v.classical = r.bytes();
  get(r, v.body);
}
void put(Writer& w, const ce::CssBlock& v) {
  put(w, v.psi);
  w.bytes(v.classical);
  put(w, v.u);
  put(w, v.h);
}
void get(Reader& r, ce::CssBlock& v) {
  get(r, v.psi);
  v.classical = r.bytes();
  get(r, v.u);
  get(r, v.h);
}
void put(Writer& w, const ce::CssCiphertext& v) { put(w, v.blocks); }
void get(Reader& r, ce::CssCiphertext& v) { get(r, v.blocks); }

// ---- garble ----

void put(Writer& w, const garble::Gate& v) {
  w.u8(v.table);
  w.u32(v.a);
  w.u32(v.b);
  w.u32(v.c);
  w.u32(v.level);
}
void get(Reader& r, garble::Gate& v) {
  v.table = r.u8();
  if (v.table > 15) throw FormatError("bad gate table");
  v.a = r.u32();
  v.b = r.u32();
  v.c = r.u32();
  v.level = r.u32();
}
void put(Writer& w, const garble::Circuit& v) {
  w.u32(v.n_inputs);
  w.u32(v.n_wires);
  put(w, v.gates);
  put(w, v.outputs);
}
void get(Reader& r, garble::Circuit& v) {
  v.n_inputs = r.u32();
  v.n_wires = r.u32();
  get(r, v.gates);
  get(r, v.outputs);
  try {
    v.validate();
  } catch (const std::invalid_argument& e) {
    throw FormatError(std::string("malformed circuit: ") + e.what());
  }
}
void put(Writer& w, const garble::GarbledRow& v) {
  put(w, v.a);
  put(w, v.b);
}
void get(Reader& r, garble::GarbledRow& v) {
  get(r, v.a);
  get(r, v.b);
}
void put(Writer& w, const garble::GarbledGate& v) { put(w, v.rows); }
void get(Reader& r, garble::GarbledGate& v) { get(r, v.rows); }
void put(Writer& w, const garble::OutputMap& v) {
  put(w, v.key);
  put(w, v.bit[0]);
  put(w, v.bit[1]);
}
void get(Reader& r, garble::OutputMap& v) {
  get(r, v.key);
  get(r, v.bit[0]);
  get(r, v.bit[1]);
}
void put(Writer& w, const garble::GarbledCircuit& v) {
  put(w, v.topology);
  put(w, v.gates);
  put(w, v.outputs);
}
void get(Reader& r, garble::GarbledCircuit& v) {
  get(r, v.topology);
  get(r, v.gates);
  get(r, v.outputs);
  if (v.gates.size() != v.topology.gates.size() || v.outputs.size() != v.topology.outputs.size())
    throw FormatError("garbled circuit does not match its topology");
}

// ---- rnce ----

void put(Writer& w, const rnce::PublicKey& v) { put(w, v.pk); }
void get(Reader& r, rnce::PublicKey& v) { get(r, v.pk); }
void put(Writer& w, const rnce::MasterKey& v) { put(w, v.sk); }
void get(Reader& r, rnce::MasterKey& v) { get(r, v.sk); }
void put(Writer& w, const rnce::SecretKey& v) {
  put(w, v.x);
  put(w, v.sk);
}
void get(Reader& r, rnce::SecretKey& v) {
  get(r, v.x);
  get(r, v.sk);
  if (v.x.size() != v.sk.size()) throw FormatError("rnce key selector length mismatch");
}
void put(Writer& w, const rnce::Ciphertext& v) { put(w, v.ct); }
void get(Reader& r, rnce::Ciphertext& v) { get(r, v.ct); }

// ---- fe ----

void put(Writer& w, const fe::Fe1Public& v) { put(w, v.pk); }
void get(Reader& r, fe::Fe1Public& v) { get(r, v.pk); }
void put(Writer& w, const fe::Fe1Master& v) { put(w, v.sk); }
void get(Reader& r, fe::Fe1Master& v) { get(r, v.sk); }
void put(Writer& w, const fe::Fe1Key& v) {
  put(w, v.f);
  put(w, v.sk);
}
void get(Reader& r, fe::Fe1Key& v) {
  get(r, v.f);
  get(r, v.sk);
  if (v.f.size() != v.sk.size()) throw FormatError("fe1 key length mismatch");
}
void put(Writer& w, const fe::Fe1Ciphertext& v) {
  put(w, v.gc);
  put(w, v.labels);
}
void get(Reader& r, fe::Fe1Ciphertext& v) {
  get(r, v.gc);
  get(r, v.labels);
}
void put(Writer& w, const fe::FeadPublic& v) {
  put(w, v.nad);
  put(w, v.nce);
}
void get(Reader& r, fe::FeadPublic& v) {
  get(r, v.nad);
  get(r, v.nce);
}
void put(Writer& w, const fe::FeadMaster& v) {
  put(w, v.nad);
  put(w, v.nce);
}
void get(Reader& r, fe::FeadMaster& v) {
  get(r, v.nad);
  get(r, v.nce);
}
void put(Writer& w, const fe::FeadKey& v) {
  put(w, v.nad);
  put(w, v.nce);
}
void get(Reader& r, fe::FeadKey& v) {
  get(r, v.nad);
  get(r, v.nce);
}
void put(Writer& w, const fe::FeadCiphertext& v) {
  put(w, v.psi);
  put(w, v.nce);
}
void get(Reader& r, fe::FeadCiphertext& v) {
  get(r, v.psi);
  get(r, v.nce);
}
void put(Writer& w, const fe::FeadVk& v) {
  put(w, v.nad);
  put(w, v.nce);
  put(w, v.a);
  put(w, v.c);
  put(w, v.layout);
}
void get(Reader& r, fe::FeadVk& v) {
  get(r, v.nad);
  get(r, v.nce);
  get(r, v.a);
  get(r, v.c);
  get(r, v.layout);
}
void put(Writer& w, const fe::FeadCert& v) {
  put(w, v.nad);
  put(w, v.nce);
}
void get(Reader& r, fe::FeadCert& v) {
  get(r, v.nad);
  get(r, v.nce);
}
void put(Writer& w, const fe::FeqParams& v) {
  for (uint64_t x : {v.lambda, v.q, v.D, v.ell, v.t, v.N, v.v, v.S}) w.u64(x);
  w.u64(v.p);
  for (double x : {v.constants.ct, v.constants.cN, v.constants.cv, v.constants.cS}) w.f64(x);
}
void get(Reader& r, fe::FeqParams& v) {
  for (size_t* x : {&v.lambda, &v.q, &v.D, &v.ell, &v.t, &v.N, &v.v, &v.S}) *x = static_cast<size_t>(r.u64());
  v.p = r.u64();
  for (double* x : {&v.constants.ct, &v.constants.cN, &v.constants.cv, &v.constants.cS}) *x = r.f64();
}
void put(Writer& w, const fe::FeqPublic& v) { put(w, v.inst); }
void get(Reader& r, fe::FeqPublic& v) { get(r, v.inst); }
void put(Writer& w, const fe::FeqMaster& v) { put(w, v.inst); }
void get(Reader& r, fe::FeqMaster& v) { get(r, v.inst); }
void put(Writer& w, const fe::FeqKey& v) {
  put(w, v.gamma);
  put(w, v.delta);
  put(w, v.keys);
}
void get(Reader& r, fe::FeqKey& v) {
  get(r, v.gamma);
  get(r, v.delta);
  get(r, v.keys);
  if (v.keys.size() != v.gamma.size()) throw FormatError("feq key count mismatch");
}
void put(Writer& w, const fe::FeqCiphertext& v) { put(w, v.inst); }
void get(Reader& r, fe::FeqCiphertext& v) { get(r, v.inst); }
void put(Writer& w, const fe::FeqCert& v) { put(w, v.inst); }
void get(Reader& r, fe::FeqCert& v) { get(r, v.inst); }

void put(Writer& w, const field::Term& v) {
  w.u64(v.coef);
  put(w, v.exps);
}
void get(Reader& r, field::Term& v) {
  v.coef = r.u64();
  get(r, v.exps);
}

}  // namespace everlast::serial
