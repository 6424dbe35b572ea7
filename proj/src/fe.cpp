// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/fe.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "everlast/errors.hpp"

namespace everlast::fe {
namespace {

BitString key_bits(const garble::Label& k) {
  Bytes b = crypto::ske_key_encode(k);
  return BitString::from_bytes(b, 8 * b.size());
}

// k distinct values from [0, n), ascending.
std::vector<uint32_t> random_subset(size_t n, size_t k, Rng& rng) {
  std::vector<uint32_t> all(n);
  for (size_t i = 0; i < n; ++i) all[i] = static_cast<uint32_t>(i);
  for (size_t i = 0; i < k; ++i) std::swap(all[i], all[i + rng.below(n - i)]);
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace

// ---- Fe1 ----

Fe1::Fe1(size_t lambda, ce::Variant variant, crypto::HashOracle H, Universal u)
    : garbler_(lambda, H),
      pke_(lambda, variant, std::move(H)),
      u_(std::move(u)),
      label_bits_(8 * crypto::ske_key_bytes(lambda)) {
  if (!u_.build) throw std::invalid_argument("fe1: universal circuit has no builder");
}

std::pair<Fe1Public, Fe1Master> Fe1::setup(Rng& rng) const {
  Fe1Public mpk;
  Fe1Master msk;
  mpk.pk.resize(u_.desc_bits);
  msk.sk.resize(u_.desc_bits);
  for (size_t i = 0; i < u_.desc_bits; ++i)
    for (int a = 0; a < 2; ++a) {
      auto kp = pke_.keygen(rng);
      mpk.pk[i][a] = kp.pk;
      msk.sk[i][a] = kp.sk;
    }
  return {std::move(mpk), std::move(msk)};
}

Fe1Key Fe1::keygen(const Fe1Master& msk, const BitString& f) const {
  if (f.size() != msk.sk.size()) throw std::invalid_argument("fe1: description length does not match key");
  Fe1Key sk;
  sk.f = f;
  for (size_t i = 0; i < f.size(); ++i) sk.sk.push_back(msk.sk[i][f[i]]);
  return sk;
}

Fe1Encryption Fe1::enc(const Fe1Public& mpk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const {
  if (m.size() != u_.msg_bits) throw std::invalid_argument("fe1: message length mismatch");
  if (mpk.pk.size() != u_.desc_bits) throw std::invalid_argument("fe1: public key size mismatch");
  garble::Circuit circuit = u_.build(m);
  garble::Labels labels = garbler_.setup(u_.desc_bits, rng);
  auto [gc, vk] = garbler_.garble(circuit, labels, reg, rng);
  Fe1Encryption out;
  out.vk = std::move(vk);
  out.ct.gc = std::move(gc);
  out.ct.labels.resize(u_.desc_bits);
  for (size_t i = 0; i < u_.desc_bits; ++i)
    for (int a = 0; a < 2; ++a) {
      auto e = pke_.enc(mpk.pk[i][a], key_bits(labels[i][a]), reg, rng);
      out.vk.append(std::move(e.vk));
      out.ct.labels[i][a] = std::move(e.ct);
    }
  return out;
}

std::optional<BitString> Fe1::dec(const Fe1Key& sk, Fe1Ciphertext& ct) const {
  if (sk.f.size() != ct.labels.size() || sk.sk.size() != ct.labels.size())
    throw std::invalid_argument("fe1: key does not match ciphertext");
  std::vector<garble::Label> input;
  input.reserve(sk.f.size());
  for (size_t i = 0; i < sk.f.size(); ++i) {
    auto bits = pke_.dec(sk.sk[i], ct.labels[i][sk.f[i]]);
    if (!bits || bits->size() != label_bits_) return std::nullopt;
    input.push_back(crypto::ske_key_decode(bits->to_bytes(), lambda()));
  }
  return garbler_.eval(ct.gc, input);
}

size_t Fe1::ciphertext_qubits() const {
  garble::Circuit c = u_.build(BitString(u_.msg_bits));
  size_t share = garbler_.ske().ciphertext_qubits(label_bits_);
  return c.gates.size() * 8 * share + 2 * u_.desc_bits * pke_.ciphertext_qubits(label_bits_);
}

ce::CertBundle del(Fe1Ciphertext& ct) {
  for (auto& p : ct.labels)
    for (auto& c : p)
      if (ce::is_consumed(c)) throw ConsumedError("fe1: ciphertext was decrypted");
  ce::CertBundle out = garble::del(ct.gc);
  for (auto& p : ct.labels)
    for (auto& c : p) out.append(ce::del(c));
  return out;
}

bool vrfy(const ce::VkBundle& vk, ce::CertBundle& cert) { return ce::verify(vk, cert); }

ce::Layout layout(const Fe1Ciphertext& ct) {
  ce::Layout l = garble::layout(ct.gc);
  for (const auto& p : ct.labels)
    for (const auto& c : p) ce::append_layout(l, ce::layout(c));
  return l;
}

std::vector<qsim::QubitHandle*> segments(Fe1Ciphertext& ct) {
  auto s = garble::segments(ct.gc);
  for (auto& p : ct.labels)
    for (auto& c : p) {
      auto part = ce::segments(c);
      s.insert(s.end(), part.begin(), part.end());
    }
  return s;
}

void modify(const ce::Layout& layout, const BitString& a, const BitString& c, ce::CertBundle& cert) {
  ce::modify(layout, a, c, cert);
}

// ---- Fead ----

Fead::Fead(size_t lambda, ce::Variant variant, crypto::HashOracle H, Universal u)
    : nad_(lambda, variant, H, std::move(u)), nce_(lambda, variant, std::move(H)), Q_(nad_.ciphertext_qubits()) {}

std::pair<FeadPublic, FeadMaster> Fead::setup(Rng& rng) const {
  auto [npk, nmsk] = nad_.setup(rng);
  auto [rpk, rmsk] = nce_.setup(2 * Q_, rng);
  return {FeadPublic{std::move(npk), std::move(rpk)}, FeadMaster{std::move(nmsk), std::move(rmsk)}};
}

FeadKey Fead::keygen(const FeadMaster& msk, const BitString& f, Rng& rng) const {
  return FeadKey{nad_.keygen(msk.nad, f), nce_.keygen(msk.nce, rng)};
}

FeadEncryption Fead::enc(const FeadPublic& mpk, const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const {
  BitString a = BitString::random(Q_, rng);
  BitString c = BitString::random(Q_, rng);
  return enc_with_mask(mpk, m, a, c, reg, rng);
}

FeadEncryption Fead::enc_with_mask(const FeadPublic& mpk, const BitString& m, const BitString& a,
                                   const BitString& c, const qsim::RegisterPtr& reg, Rng& rng) const {
  if (a.size() != Q_ || c.size() != Q_) throw std::invalid_argument("fead: mask length mismatch");
  auto e = nad_.enc(mpk.nad, m, reg, rng);
  ce::mask(segments(e.ct), a, c);
  BitString ac = a;
  ac.append(c);
  auto r = nce_.enc(mpk.nce, ac, reg, rng);
  FeadEncryption out;
  out.vk.nad = std::move(e.vk);
  out.vk.nce = std::move(r.vk);
  out.vk.a = a;
  out.vk.c = c;
  out.vk.layout = layout(e.ct);
  out.ct.psi = std::move(e.ct);
  out.ct.nce = std::move(r.ct);
  return out;
}

std::optional<BitString> Fead::dec(const FeadKey& sk, FeadCiphertext& ct) const {
  auto ac = nce_.dec(sk.nce, ct.nce);
  if (!ac || ac->size() != 2 * Q_) return std::nullopt;
  ce::unmask(segments(ct.psi), ac->slice(0, Q_), ac->slice(Q_, Q_));
  return nad_.dec(sk.nad, ct.psi);
}

FeadCert del(FeadCiphertext& ct) {
  FeadCert out;
  out.nad = del(ct.psi);
  out.nce = rnce::del(ct.nce);
  return out;
}

bool vrfy(const FeadVk& vk, FeadCert& cert) {
  ce::modify(vk.layout, vk.a, vk.c, cert.nad);
  bool nad = vrfy(vk.nad, cert.nad);
  bool nce = rnce::vrfy(vk.nce, cert.nce);
  return nad && nce;
}

// ---- Feq ----

FeqParams choose_params(size_t lambda, size_t q, size_t D, size_t ell, const FeqConstants& c, uint64_t p_override) {
  if (lambda == 0 || q == 0 || D == 0 || ell == 0) throw std::invalid_argument("feq: parameters must be positive");
  auto up = [](double v) { return static_cast<size_t>(std::max(1.0, std::ceil(v - 1e-9))); };
  FeqParams p;
  p.lambda = lambda;
  p.q = q;
  p.D = D;
  p.ell = ell;
  p.constants = c;
  double q2 = static_cast<double>(q * q);
  p.t = up(c.ct * q2 * static_cast<double>(lambda));
  p.N = up(c.cN * static_cast<double>(D * D) * q2 * static_cast<double>(p.t));
  p.v = up(c.cv * static_cast<double>(lambda));
  p.S = up(c.cS * static_cast<double>(p.v) * q2);
  if (p.t * D + 1 > p.N) throw std::invalid_argument("feq: tD + 1 exceeds N");
  if (p.v > p.S) throw std::invalid_argument("feq: v exceeds S");
  if (p_override != 0) {
    if (!field::is_prime(p_override) || p_override <= p.N) throw std::invalid_argument("feq: p must be a prime above N");
    p.p = p_override;
  } else {
    p.p = p.N < 257 ? 257 : field::next_prime_above(p.N);
  }
  return p;
}

namespace {

std::variant<Fe1, Fead> make_inner(const FeqParams& params, FeqInner inner, ce::Variant variant,
                                   crypto::HashOracle H, Universal u) {
  if (inner == FeqInner::kAdaptive) return Fead(params.lambda, variant, std::move(H), std::move(u));
  return Fe1(params.lambda, variant, std::move(H), std::move(u));
}

}  // namespace

Feq::Feq(const FeqParams& params, ce::Variant variant, crypto::HashOracle H, FeqInner inner)
    : params_(params),
      inner_(inner),
      shape_(universal::linear_shape(field::Field(params.p), params.ell, params.D, params.S)),
      one_(make_inner(params, inner, variant, std::move(H), universal::linear(shape_))) {
  if (params.t * params.D + 1 > params.N) throw std::invalid_argument("feq: tD + 1 exceeds N");
  if (params.N >= params.p) throw std::invalid_argument("feq: p must exceed N");
  if (params.v > params.S) throw std::invalid_argument("feq: v exceeds S");
}

std::pair<FeqPublic, FeqMaster> Feq::setup(Rng& rng) const {
  FeqPublic mpk;
  FeqMaster msk;
  for (size_t i = 0; i < params_.N; ++i)
    std::visit(
        [&](const auto& s) {
          auto [pk, sk] = s.setup(rng);
          mpk.inst.emplace_back(std::move(pk));
          msk.inst.emplace_back(std::move(sk));
        },
        one_);
  return {std::move(mpk), std::move(msk)};
}

FeqKey Feq::keygen(const FeqMaster& msk, const field::SparsePolynomial& C, Rng& rng) const {
  if (msk.inst.size() != params_.N) throw std::invalid_argument("feq: master key size mismatch");
  C.check(field(), params_.D);
  FeqKey sk;
  sk.gamma = random_subset(params_.N, params_.t * params_.D + 1, rng);
  for (auto& g : sk.gamma) ++g;
  sk.delta = random_subset(params_.S, params_.v, rng);
  BitString desc = universal::encode_linear_desc(shape_, C, sk.delta);
  for (uint32_t i : sk.gamma) {
    const InnerMaster& m = msk.inst[i - 1];
    if (const auto* s = std::get_if<Fe1>(&one_)) sk.keys.emplace_back(s->keygen(std::get<Fe1Master>(m), desc));
    else sk.keys.emplace_back(std::get<Fead>(one_).keygen(std::get<FeadMaster>(m), desc, rng));
  }
  return sk;
}

std::vector<std::vector<uint64_t>> Feq::shares(const std::vector<uint64_t>& x, Rng& rng) const {
  const field::Field& f = field();
  if (x.size() != params_.ell) throw std::invalid_argument("feq: input length mismatch");
  std::vector<field::UniPoly> polys;
  for (uint64_t xi : x) {
    if (xi >= f.p()) throw std::invalid_argument("feq: input not reduced mod p");
    polys.push_back(field::sample_poly(f, params_.t, xi, rng));
  }
  for (size_t a = 0; a < params_.S; ++a) polys.push_back(field::sample_poly(f, params_.D * params_.t, 0, rng));
  std::vector<std::vector<uint64_t>> rows(params_.N);
  for (size_t i = 0; i < params_.N; ++i)
    for (const auto& poly : polys) rows[i].push_back(poly.eval(f, i + 1));
  return rows;
}

FeqEncryption Feq::enc(const FeqPublic& mpk, const std::vector<uint64_t>& x, const qsim::RegisterPtr& reg,
                       Rng& rng) const {
  if (mpk.inst.size() != params_.N) throw std::invalid_argument("feq: public key size mismatch");
  auto rows = shares(x, rng);
  FeqEncryption out;
  for (size_t i = 0; i < params_.N; ++i) {
    BitString m = universal::encode_elements(field(), rows[i]);
    if (const auto* s = std::get_if<Fe1>(&one_)) {
      auto e = s->enc(std::get<Fe1Public>(mpk.inst[i]), m, reg, rng);
      out.vk.emplace_back(std::move(e.vk));
      out.ct.inst.emplace_back(std::move(e.ct));
    } else {
      auto e = std::get<Fead>(one_).enc(std::get<FeadPublic>(mpk.inst[i]), m, reg, rng);
      out.vk.emplace_back(std::move(e.vk));
      out.ct.inst.emplace_back(std::move(e.ct));
    }
  }
  return out;
}

std::optional<uint64_t> Feq::dec(const FeqKey& sk, FeqCiphertext& ct) const {
  if (ct.inst.size() != params_.N) throw std::invalid_argument("feq: ciphertext size mismatch");
  if (sk.keys.size() != sk.gamma.size()) throw std::invalid_argument("feq: malformed key");
  std::vector<std::pair<uint64_t, uint64_t>> pts;
  for (size_t k = 0; k < sk.gamma.size(); ++k) {
    uint32_t i = sk.gamma[k];
    if (i == 0 || i > params_.N) throw std::invalid_argument("feq: instance index out of range");
    std::optional<BitString> y;
    if (const auto* s = std::get_if<Fe1>(&one_))
      y = s->dec(std::get<Fe1Key>(sk.keys[k]), std::get<Fe1Ciphertext>(ct.inst[i - 1]));
    else
      y = std::get<Fead>(one_).dec(std::get<FeadKey>(sk.keys[k]), std::get<FeadCiphertext>(ct.inst[i - 1]));
    if (!y) return std::nullopt;
    std::vector<uint64_t> eta;
    try {
      eta = universal::decode_elements(field(), *y);
    } catch (const FormatError&) {
      return std::nullopt;
    }
    if (eta.size() != 1) return std::nullopt;
    pts.emplace_back(i, eta[0]);
  }
  return field::lagrange_at_zero(field(), pts);
}

FeqCert del(FeqCiphertext& ct) {
  FeqCert out;
  for (auto& c : ct.inst) std::visit([&](auto& x) { out.inst.emplace_back(del(x)); }, c);
  return out;
}

bool vrfy(const std::vector<InnerVk>& vk, FeqCert& cert) {
  if (vk.size() != cert.inst.size()) return false;
  bool ok = true;
  for (size_t i = 0; i < vk.size(); ++i) {
    bool r = std::visit(
        [&](const auto& v) -> bool {
          using V = std::decay_t<decltype(v)>;
          using C = std::conditional_t<std::is_same_v<V, ce::VkBundle>, ce::CertBundle, FeadCert>;
          auto* c = std::get_if<C>(&cert.inst[i]);
          if (c == nullptr) return false;
          return vrfy(v, *c);
        },
        vk[i]);
    ok = ok && r;
  }
  return ok;
}

}  // namespace everlast::fe
