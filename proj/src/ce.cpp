// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/ce.hpp"

#include <algorithm>
#include <stdexcept>

namespace everlast::ce {
namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

// Uniform size-p subset of [0, total), ascending.
std::vector<uint32_t> sample_subset(size_t total, size_t p, Rng& rng) {
  std::vector<uint32_t> all(total);
  for (size_t i = 0; i < total; ++i) all[i] = static_cast<uint32_t>(i);
  for (size_t i = 0; i < p; ++i) std::swap(all[i], all[i + rng.below(total - i)]);
  all.resize(p);
  std::sort(all.begin(), all.end());
  return all;
}

// B | Q | r | y, with Q as one byte per index.
Bytes encode_css_secret(const CssVk& vk, const BitString& y) {
  Bytes out = vk.B.to_bytes();
  for (uint32_t q : vk.Q) out.push_back(static_cast<uint8_t>(q));
  Bytes r = vk.r.to_bytes(), yb = y.to_bytes();
  out.insert(out.end(), r.begin(), r.end());
  out.insert(out.end(), yb.begin(), yb.end());
  return out;
}

std::optional<std::pair<CssVk, BitString>> decode_css_secret(const Bytes& b, size_t p, size_t q) {
  size_t pb = (p + 7) / 8, qb = (q + 7) / 8;
  if (b.size() != 2 * pb + p + qb) return std::nullopt;
  CssVk vk;
  vk.B = BitString::from_bytes(Bytes(b.begin(), b.begin() + pb), p);
  for (size_t i = 0; i < p; ++i) vk.Q.push_back(b[pb + i]);
  vk.r = BitString::from_bytes(Bytes(b.begin() + pb + p, b.begin() + 2 * pb + p), p);
  BitString y = BitString::from_bytes(Bytes(b.begin() + 2 * pb + p, b.end()), q);
  for (size_t i = 0; i < p; ++i)
    if (vk.Q[i] >= p + q || (i > 0 && vk.Q[i] <= vk.Q[i - 1])) return std::nullopt;
  return std::make_pair(std::move(vk), std::move(y));
}

std::vector<size_t> range(size_t from, size_t to) {
  std::vector<size_t> r;
  for (size_t i = from; i < to; ++i) r.push_back(i);
  return r;
}

bool css_verify(const CssVk& vk, qsim::QubitHandle& cert) {
  size_t p = vk.B.size();
  if (cert.size() < p) {
    qsim::discard(cert);
    return false;
  }
  qsim::apply_permutation(cert, vk.Q);
  std::vector<size_t> had;
  for (size_t i = 0; i < p; ++i)
    if (vk.B[i]) had.push_back(i);
  qsim::apply_hadamard(cert, had);
  BitString got = qsim::measure(cert, range(0, p), qsim::Basis::kComputational);
  qsim::discard(cert);
  return got == vk.r;
}

}  // namespace

const char* variant_name(Variant v) { return v == Variant::kQrom ? "qrom" : "css"; }

void VkBundle::append(VkBundle&& o) {
  parts.insert(parts.end(), std::make_move_iterator(o.parts.begin()), std::make_move_iterator(o.parts.end()));
}

void CertBundle::append(CertBundle&& o) {
  parts.insert(parts.end(), std::make_move_iterator(o.parts.begin()), std::make_move_iterator(o.parts.end()));
}

bool verify_part(const VkPart& vk, CertPart& cert) {
  if (const auto* k = std::get_if<otcd::Key>(&vk)) {
    const auto* c = std::get_if<otcd::Cert>(&cert);
    if (c == nullptr) {
      qsim::discard(std::get<qsim::QubitHandle>(cert));
      return false;
    }
    return c->size() == k->theta.size() && otcd::vrfy(*k, *c);
  }
  const CssVk& cv = std::get<CssVk>(vk);
  auto* h = std::get_if<qsim::QubitHandle>(&cert);
  if (h == nullptr) return false;
  return css_verify(cv, *h);
}

bool verify(const VkBundle& vk, CertBundle& cert) {
  bool ok = vk.parts.size() == cert.parts.size();
  for (size_t i = 0; i < cert.parts.size(); ++i) {
    if (i < vk.parts.size()) {
      ok = verify_part(vk.parts[i], cert.parts[i]) && ok;
    } else if (auto* h = std::get_if<qsim::QubitHandle>(&cert.parts[i])) {
      qsim::discard(*h);
    }
  }
  return ok;
}

size_t layout_qubits(const Layout& l) {
  size_t n = 0;
  for (const auto& s : l) n += s.qubits;
  return n;
}

void append_layout(Layout& dst, const Layout& src) { dst.insert(dst.end(), src.begin(), src.end()); }

namespace {

template <class F>
void for_each_slice(const std::vector<qsim::QubitHandle*>& segs, const BitString& a, const BitString& c, F f) {
  size_t total = 0;
  for (auto* h : segs) total += h->size();
  if (a.size() != total || c.size() != total) throw FormatError("mask length does not match layout");
  size_t off = 0;
  for (auto* h : segs) {
    f(*h, a.slice(off, h->size()), c.slice(off, h->size()));
    off += h->size();
  }
}

}  // namespace

void mask(const std::vector<qsim::QubitHandle*>& segs, const BitString& a, const BitString& c) {
  for_each_slice(segs, a, c, [](qsim::QubitHandle& h, const BitString& sa, const BitString& sc) {
    qsim::apply_pauli(h, sa, sc);
  });
}

void unmask(const std::vector<qsim::QubitHandle*>& segs, const BitString& a, const BitString& c) {
  for_each_slice(segs, a, c, [](qsim::QubitHandle& h, const BitString& sa, const BitString& sc) {
    qsim::apply_pauli_inverse(h, sa, sc);
  });
}

void modify(const Layout& layout, const BitString& a, const BitString& c, CertBundle& cert) {
  if (layout.size() != cert.parts.size()) throw FormatError("certificate does not match layout");
  size_t total = layout_qubits(layout);
  if (a.size() != total || c.size() != total) throw FormatError("mask length does not match layout");
  size_t off = 0;
  for (size_t i = 0; i < layout.size(); ++i) {
    size_t n = layout[i].qubits;
    BitString sa = a.slice(off, n), sc = c.slice(off, n);
    off += n;
    if (layout[i].quantum_cert) {
      auto* h = std::get_if<qsim::QubitHandle>(&cert.parts[i]);
      if (h == nullptr || h->size() != n) throw FormatError("certificate part does not match layout");
      qsim::apply_pauli_inverse(*h, sa, sc);
    } else {
      auto* b = std::get_if<otcd::Cert>(&cert.parts[i]);
      if (b == nullptr || b->size() != n) throw FormatError("certificate part does not match layout");
      *b = otcd::modify(sa, sc, *b);
    }
  }
}

Layout layout(const Ciphertext& ct) {
  return std::visit(Overload{[](const QromCiphertext& q) {
                               return Layout{{static_cast<uint32_t>(q.body.qubits.size()), false}};
                             },
                             [](const CssCiphertext& c) {
                               Layout l;
                               for (const auto& b : c.blocks) l.push_back({static_cast<uint32_t>(b.psi.size()), true});
                               return l;
                             }},
                    ct);
}

std::vector<qsim::QubitHandle*> segments(Ciphertext& ct) {
  return std::visit(Overload{[](QromCiphertext& q) { return std::vector<qsim::QubitHandle*>{&q.body.qubits}; },
                             [](CssCiphertext& c) {
                               std::vector<qsim::QubitHandle*> s;
                               for (auto& b : c.blocks) s.push_back(&b.psi);
                               return s;
                             }},
                    ct);
}

CertBundle del(Ciphertext& ct) {
  CertBundle out;
  std::visit(Overload{[&](QromCiphertext& q) { out.parts.emplace_back(otcd::del(q.body)); },
                      [&](CssCiphertext& c) {
                        for (auto& b : c.blocks) {
                          b.psi.reg();  // throws if consumed
                          out.parts.emplace_back(std::move(b.psi));
                        }
                      }},
             ct);
  return out;
}

bool is_consumed(const Ciphertext& ct) {
  return std::visit(Overload{[](const QromCiphertext& q) { return q.body.qubits.consumed(); },
                             [](const CssCiphertext& c) {
                               for (const auto& b : c.blocks)
                                 if (b.psi.consumed()) return true;
                               return false;
                             }},
                    ct);
}

Scheme::Scheme(size_t lambda, Variant variant, crypto::HashOracle H, CssParams css)
    : lambda_(lambda), variant_(variant), H_(std::move(H)), css_(std::move(css)) {
  if (lambda == 0) throw std::invalid_argument("lambda must be positive");
  if (css_.p + css_.pair.length() > 255) throw std::invalid_argument("CSS block too large");
}

size_t Scheme::ciphertext_qubits(size_t n) const {
  return variant_ == Variant::kQrom ? n * lambda_ : n * (css_.p + css_.pair.length());
}

Layout Scheme::message_layout(size_t n) const {
  if (variant_ == Variant::kQrom) return {{static_cast<uint32_t>(n * lambda_), false}};
  return Layout(n, Segment{static_cast<uint32_t>(css_.p + css_.pair.length()), true});
}

QromCiphertext Scheme::qrom_enc(const BitString& m, const ClassicalEnc& cenc, const qsim::RegisterPtr& reg,
                                Rng& rng, otcd::Key* vk) const {
  otcd::Key cd = otcd::keygen(lambda_, m.size(), rng);
  BitString R = BitString::random(lambda_, rng);
  Bytes Rb = R.to_bytes();
  QromCiphertext ct;
  ct.classical = cenc(Rb);
  Bytes kb = otcd::encode_key(cd);
  ct.h = xor_bytes(H_.query(Rb, kb.size()), kb);
  ct.body = otcd::enc(cd, m, reg, rng);
  if (vk != nullptr) *vk = std::move(cd);
  return ct;
}

std::optional<otcd::Key> Scheme::qrom_unlock(const QromCiphertext& ct, const ClassicalDec& cdec) const {
  std::optional<Bytes> R = cdec(ct.classical);
  if (!R) return std::nullopt;
  try {
    otcd::Key k = otcd::decode_key(xor_bytes(H_.query(*R, ct.h.size()), ct.h));
    if (k.theta.size() != ct.body.qubits.size() || k.n != ct.body.c.size()) return std::nullopt;
    return k;
  } catch (const FormatError&) {
    return std::nullopt;
  }
}

Encryption Scheme::enc_impl(const BitString& m, const ClassicalEnc& cenc, const qsim::RegisterPtr& reg,
                            Rng& rng) const {
  Encryption out;
  if (variant_ == Variant::kQrom) {
    otcd::Key vk;
    out.ct = qrom_enc(m, cenc, reg, rng, &vk);
    out.vk.parts.emplace_back(std::move(vk));
    return out;
  }
  const codes::CssPair& pair = css_.pair;
  size_t p = css_.p, q = pair.length();
  CssCiphertext ct;
  for (size_t i = 0; i < m.size(); ++i) {
    CssVk vk;
    vk.B = BitString::random(p, rng);
    vk.Q = sample_subset(p + q, p, rng);
    BitString y = pair.sample(codes::CosetSpace::kC1ModC2, rng);
    BitString u = pair.sample(codes::CosetSpace::kAmbientModC1, rng);
    vk.r = BitString::random(p, rng);
    BitString x = pair.sample(codes::CosetSpace::kC1ModC2, rng);
    BitString w = pair.sample(codes::CosetSpace::kC2, rng);
    CssBlock blk;
    blk.classical = cenc(encode_css_secret(vk, y));
    BitString z = vk.r, theta = vk.B;
    z.append(x ^ w ^ u);
    theta.append(BitString(q));
    blk.psi = qsim::alloc_bb84(reg, z, theta);
    qsim::apply_permutation_inverse(blk.psi, vk.Q);
    blk.u = u;
    blk.h = pair.encode_bit(m[i]) ^ x ^ y;
    ct.blocks.push_back(std::move(blk));
    out.vk.parts.emplace_back(std::move(vk));
  }
  out.ct = std::move(ct);
  return out;
}

std::optional<BitString> Scheme::dec_impl(Ciphertext& ct, const ClassicalDec& cdec) const {
  if (auto* qc = std::get_if<QromCiphertext>(&ct)) {
    qc->body.qubits.reg();
    auto k = qrom_unlock(*qc, cdec);
    if (!k) return std::nullopt;
    return otcd::dec(*k, qc->body);
  }
  auto& cc = std::get<CssCiphertext>(ct);
  const codes::CssPair& pair = css_.pair;
  size_t p = css_.p, q = pair.length();
  BitString m(cc.blocks.size());
  for (size_t i = 0; i < cc.blocks.size(); ++i) {
    CssBlock& blk = cc.blocks[i];
    blk.psi.reg();
    auto secret = cdec(blk.classical);
    if (!secret) return std::nullopt;
    auto parsed = decode_css_secret(*secret, p, q);
    if (!parsed) return std::nullopt;
    auto& [vk, y] = *parsed;
    qsim::apply_permutation(blk.psi, vk.Q);
    BitString gamma = qsim::measure(blk.psi, range(p, p + q), qsim::Basis::kComputational);
    qsim::discard(blk.psi);
    BitString x = pair.c2().coset_mod(gamma ^ blk.u);
    try {
      m.set(i, pair.decode_bit(blk.h ^ x ^ y));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  return m;
}

Encryption Ske::enc(const crypto::SkeKey& sk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const {
  return enc_impl(m, [&](const Bytes& b) { return crypto::ske_enc(sk, b, rng); }, reg, rng);
}

std::optional<BitString> Ske::dec(const crypto::SkeKey& sk, Ciphertext& ct) const {
  return dec_impl(ct, [&](const Bytes& b) { return crypto::ske_dec(sk, b); });
}

QromCiphertext Ske::enc_qrom(const crypto::SkeKey& sk, const BitString& m, const qsim::RegisterPtr& reg,
                             Rng& rng, otcd::Key* vk) const {
  return qrom_enc(m, [&](const Bytes& b) { return crypto::ske_enc(sk, b, rng); }, reg, rng, vk);
}

std::optional<otcd::Key> Ske::unlock(const crypto::SkeKey& sk, const QromCiphertext& ct) const {
  return qrom_unlock(ct, [&](const Bytes& b) { return crypto::ske_dec(sk, b); });
}

Encryption Pke::enc(const crypto::PkePublicKey& pk, const BitString& m, const qsim::RegisterPtr& reg,
                    Rng& rng) const {
  return enc_impl(m, [&](const Bytes& b) { return crypto::pke_enc(pk, b, rng); }, reg, rng);
}

std::optional<BitString> Pke::dec(const crypto::PkeSecretKey& sk, Ciphertext& ct) const {
  return dec_impl(ct, [&](const Bytes& b) { return crypto::pke_dec(sk, b); });
}

}  // namespace everlast::ce
