// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/harness.hpp"

#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace everlast::harness {

const char* class_name(AdversaryClass c) {
  switch (c) {
    case AdversaryClass::kHonestDeleter: return "honest-deleter";
    case AdversaryClass::kKeepAndMeasure: return "keep-and-measure";
    case AdversaryClass::kCertGuesser: return "cert-guesser";
    case AdversaryClass::kCustom: return "custom";
  }
  return "?";
}

uint64_t trial_seed(uint64_t run_seed, uint64_t trial) {
  // splitmix64 finalizer over the pair.
  uint64_t z = run_seed + 0x9E3779B97F4A7C15ull * (trial + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

void GameCounts::add(const GameTranscript& t) {
  ++trials;
  if (t.accepted) ++accepted;
  auto out = t.output();
  if (out && *out) ++output_one;
  if (t.accepted && t.guess && *t.guess == t.b) ++accepted_correct;
  if (t.guess && *t.guess) ++guess_one;
}

namespace {

double frac(size_t k, size_t n) { return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n); }
double binom_var(double p, size_t n) { return n == 0 ? 0.0 : p * (1 - p) / static_cast<double>(n); }

}  // namespace

double GameStats::acceptance() const { return frac(b0.accepted + b1.accepted, b0.trials + b1.trials); }

double GameStats::acceptance_sigma() const { return std::sqrt(binom_var(acceptance(), b0.trials + b1.trials)); }

double GameStats::advantage() const {
  return std::abs(frac(b1.output_one, b1.trials) - frac(b0.output_one, b0.trials));
}

double GameStats::advantage_sigma() const {
  double p0 = frac(b0.output_one, b0.trials), p1 = frac(b1.output_one, b1.trials);
  return std::sqrt(binom_var(p0, b0.trials) + binom_var(p1, b1.trials));
}

double GameStats::conditional_advantage() const {
  if (b0.accepted == 0 || b1.accepted == 0) return 0;
  double p1 = frac(b1.output_one, b1.accepted);
  double p0 = frac(b0.output_one, b0.accepted);
  return std::abs(p1 - p0);
}

double GameStats::unconditional_advantage() const {
  return std::abs(frac(b1.guess_one, b1.trials) - frac(b0.guess_one, b0.trials));
}

namespace {

std::pair<BitString, BitString> zero_one(size_t n) { return {BitString(n), BitString::ones(n)}; }

void check_messages(const std::pair<BitString, BitString>& m) {
  if (m.first.size() != m.second.size() || m.first.size() == 0)
    throw std::invalid_argument("adversary protocol violation: challenge messages must be nonempty and equal length");
}

// ---- OT-CD adversaries ----

class OtcdHonest : public OtcdAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kHonestDeleter; }
  std::string tag() const override { return "honest-deleter"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<otcd::Cert> cert(otcd::Ciphertext& ct, Rng&) override { return otcd::del(ct); }
  bool guess(const std::optional<otcd::Key>&, Rng& rng) override { return rng.bit(); }
};

// Measures everything in the computational basis, submits the outcomes as
// the certificate, and decodes with the disclosed key.
class OtcdKeepAndMeasure : public OtcdAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kKeepAndMeasure; }
  std::string tag() const override { return "keep-and-measure"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<otcd::Cert> cert(otcd::Ciphertext& ct, Rng&) override {
    o_ = qsim::measure_all(ct.qubits, qsim::Basis::kComputational);
    c_ = ct.c;
    return o_;
  }
  bool guess(const std::optional<otcd::Key>& sk, Rng& rng) override {
    if (!sk) return rng.bit();
    size_t L = sk->lambda;
    bool parity = false;
    for (size_t i = 0; i < L; ++i)
      if (!sk->theta[i]) parity ^= o_[i];
    return c_[0] != parity;
  }

 private:
  BitString o_, c_;
};

class OtcdCertGuesser : public OtcdAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kCertGuesser; }
  std::string tag() const override { return "cert-guesser"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<otcd::Cert> cert(otcd::Ciphertext& ct, Rng& rng) override {
    size_t n = ct.qubits.size();
    qsim::discard(ct.qubits);
    return BitString::random(n, rng);
  }
  bool guess(const std::optional<otcd::Key>&, Rng& rng) override { return rng.bit(); }
};

}  // namespace

OtcdFactory otcd_adversary(const std::string& tag) {
  if (tag == "honest-deleter") return [] { return std::make_unique<OtcdHonest>(); };
  if (tag == "keep-and-measure") return [] { return std::make_unique<OtcdKeepAndMeasure>(); };
  if (tag == "cert-guesser") return [] { return std::make_unique<OtcdCertGuesser>(); };
  throw std::invalid_argument("unknown otcd adversary: " + tag);
}

std::vector<std::string> otcd_adversary_tags() { return {"honest-deleter", "keep-and-measure", "cert-guesser"}; }

GameTranscript otcd_trial(const OtcdFactory& adv, size_t lambda, bool b, uint64_t seed) {
  Rng rng(seed);
  Rng arng = rng.fork();
  auto a = adv();
  GameTranscript t;
  t.b = b;
  t.seed = seed;
  auto m = a->messages(arng);
  check_messages(m);
  t.m0 = m.first;
  t.m1 = m.second;
  otcd::Key sk = otcd::keygen(lambda, t.m0.size(), rng);
  auto reg = qsim::QuantumRegister::create(rng.next());
  otcd::Ciphertext ct = otcd::enc(sk, b ? t.m1 : t.m0, reg, rng);
  auto cert = a->cert(ct, arng);
  t.refused = !cert.has_value();
  t.accepted = cert && cert->size() == sk.theta.size() && otcd::vrfy(sk, *cert);
  t.guess = a->guess(t.accepted ? std::optional<otcd::Key>(sk) : std::nullopt, arng);
  return t;
}

GameCounts run_otcd_game(const OtcdFactory& adv, size_t lambda, size_t trials, bool b, uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  GameCounts c;
  for (size_t i = 0; i < trials; ++i) c.add(otcd_trial(adv, lambda, b, trial_seed(seed, 2 * i + b)));
  return c;
}

GameStats run_otcd_game(const OtcdFactory& adv, size_t lambda, size_t trials, uint64_t seed) {
  return {run_otcd_game(adv, lambda, trials, false, seed), run_otcd_game(adv, lambda, trials, true, seed)};
}

// ---- CE IND-CPA ----

const char* primitive_name(CePrimitive p) {
  switch (p) {
    case CePrimitive::kSkeQrom: return "ce-ske-qrom";
    case CePrimitive::kSkeCss: return "ce-ske-css";
    case CePrimitive::kPkeQrom: return "ce-pke-qrom";
    case CePrimitive::kPkeCss: return "ce-pke-css";
  }
  return "?";
}

std::optional<CePrimitive> parse_primitive(const std::string& name) {
  for (auto p : {CePrimitive::kSkeQrom, CePrimitive::kSkeCss, CePrimitive::kPkeQrom, CePrimitive::kPkeCss})
    if (name == primitive_name(p)) return p;
  return std::nullopt;
}

namespace {

// Uniformly random certificate of the right shape: random bits for
// classical parts, random BB84 qubits for quantum parts.
ce::CertBundle forge_cert(const ce::Layout& layout, const qsim::RegisterPtr& reg, Rng& rng) {
  ce::CertBundle out;
  for (const auto& s : layout) {
    if (s.quantum_cert) {
      out.parts.emplace_back(
          qsim::alloc_bb84(reg, BitString::random(s.qubits, rng), BitString::random(s.qubits, rng)));
    } else {
      out.parts.emplace_back(BitString::random(s.qubits, rng));
    }
  }
  return out;
}

bool guess_from(const std::optional<BitString>& m, Rng& rng) {
  if (!m || m->size() == 0) return rng.bit();
  return (*m)[0];
}

class CeHonest : public CeAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kHonestDeleter; }
  std::string tag() const override { return "honest-deleter"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<ce::CertBundle> cert(ce::Ciphertext& ct, const qsim::RegisterPtr&, Rng&) override {
    return ce::del(ct);
  }
  bool guess(const std::optional<Disclosure>&, Rng& rng) override { return rng.bit(); }
};

// Keeps the ciphertext and never answers with a certificate.
class CeNoDeletion : public CeAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kCustom; }
  std::string tag() const override { return "no-deletion"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<ce::CertBundle> cert(ce::Ciphertext&, const qsim::RegisterPtr&, Rng&) override {
    return std::nullopt;
  }
  bool guess(const std::optional<Disclosure>&, Rng& rng) override { return rng.bit(); }
};

// Deletes honestly, keeps the post-measurement state (classical
// certificate bits re-prepared in the Hadamard basis) and decrypts it
// once the key arrives. Quantum certificate parts leave nothing behind.
class CeDeleteThenDecrypt : public CeAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kCustom; }
  std::string tag() const override { return "delete-then-decrypt"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<ce::CertBundle> cert(ce::Ciphertext& ct, const qsim::RegisterPtr& reg, Rng&) override {
    layout_ = ce::layout(ct);
    reg_ = reg;
    ce::CertBundle cert = ce::del(ct);
    kept_.clear();
    for (const auto& p : cert.parts) {
      if (const auto* c = std::get_if<otcd::Cert>(&p)) kept_.push_back(*c);
      else kept_.emplace_back();
    }
    ct_ = &ct;
    return cert;
  }
  bool guess(const std::optional<Disclosure>& key, Rng& rng) override {
    if (!key) return rng.bit();
    auto segs = ce::segments(*ct_);
    for (size_t i = 0; i < segs.size(); ++i) {
      size_t n = layout_[i].qubits;
      BitString z = layout_[i].quantum_cert ? BitString(n) : kept_[i];
      BitString theta = layout_[i].quantum_cert ? BitString(n) : BitString::ones(n);
      *segs[i] = qsim::alloc_bb84(reg_, z, theta);
    }
    return guess_from(key->decrypt(*ct_), rng);
  }

 private:
  ce::Layout layout_;
  qsim::RegisterPtr reg_;
  std::vector<BitString> kept_;
  ce::Ciphertext* ct_ = nullptr;
};

// Keeps the ciphertext intact, answers with a forged certificate, and
// decrypts the untouched ciphertext if the key is disclosed.
class CeDecBeforeDelete : public CeAdversary {
 public:
  AdversaryClass cls() const override { return AdversaryClass::kCertGuesser; }
  std::string tag() const override { return "dec-before-delete"; }
  std::pair<BitString, BitString> messages(Rng&) override { return zero_one(1); }
  std::optional<ce::CertBundle> cert(ce::Ciphertext& ct, const qsim::RegisterPtr& reg, Rng& rng) override {
    ct_ = &ct;
    return forge_cert(ce::layout(ct), reg, rng);
  }
  bool guess(const std::optional<Disclosure>& key, Rng& rng) override {
    if (!key) return rng.bit();
    return guess_from(key->decrypt(*ct_), rng);
  }

 private:
  ce::Ciphertext* ct_ = nullptr;
};

struct CeInstance {
  std::optional<ce::Ske> ske;
  std::optional<ce::Pke> pke;
  crypto::SkeKey sk;
  crypto::PkeKeyPair kp;

  CeInstance(CePrimitive prim, size_t lambda, Rng& rng) {
    auto H = crypto::HashOracle::random(rng);
    bool css = prim == CePrimitive::kSkeCss || prim == CePrimitive::kPkeCss;
    ce::Variant v = css ? ce::Variant::kCss : ce::Variant::kQrom;
    if (prim == CePrimitive::kSkeQrom || prim == CePrimitive::kSkeCss) {
      ske.emplace(lambda, v, H);
      sk = ske->keygen(rng);
    } else {
      pke.emplace(lambda, v, H);
      kp = pke->keygen(rng);
    }
  }
  ce::Encryption enc(const BitString& m, const qsim::RegisterPtr& reg, Rng& rng) const {
    return ske ? ske->enc(sk, m, reg, rng) : pke->enc(kp.pk, m, reg, rng);
  }
  Disclosure disclose() const {
    if (ske) {
      ce::Ske s = *ske;
      crypto::SkeKey k = sk;
      return {[s, k](ce::Ciphertext& ct) { return s.dec(k, ct); }};
    }
    ce::Pke s = *pke;
    crypto::PkeSecretKey k = kp.sk;
    return {[s, k](ce::Ciphertext& ct) { return s.dec(k, ct); }};
  }
};

void discard_cert(ce::CertBundle& cert) {
  for (auto& p : cert.parts)
    if (auto* h = std::get_if<qsim::QubitHandle>(&p); h != nullptr && h->valid()) qsim::discard(*h);
}

}  // namespace

CeFactory ce_adversary(const std::string& tag) {
  if (tag == "honest-deleter") return [] { return std::make_unique<CeHonest>(); };
  if (tag == "no-deletion") return [] { return std::make_unique<CeNoDeletion>(); };
  if (tag == "delete-then-decrypt") return [] { return std::make_unique<CeDeleteThenDecrypt>(); };
  if (tag == "dec-before-delete") return [] { return std::make_unique<CeDecBeforeDelete>(); };
  throw std::invalid_argument("unknown ce adversary: " + tag);
}

std::vector<std::string> ce_adversary_tags() {
  return {"honest-deleter", "no-deletion", "delete-then-decrypt", "dec-before-delete"};
}

GameTranscript ce_trial(CePrimitive prim, const CeFactory& adv, size_t lambda, bool b, uint64_t seed,
                        Disclose mode) {
  Rng rng(seed);
  Rng arng = rng.fork();
  auto a = adv();
  GameTranscript t;
  t.b = b;
  t.seed = seed;
  CeInstance inst(prim, lambda, rng);
  auto m = a->messages(arng);
  check_messages(m);
  t.m0 = m.first;
  t.m1 = m.second;
  auto reg = qsim::QuantumRegister::create(rng.next());
  ce::Encryption e = inst.enc(b ? t.m1 : t.m0, reg, rng);
  auto cert = a->cert(e.ct, reg, arng);
  t.refused = !cert.has_value();
  if (cert) {
    t.accepted = ce::verify(e.vk, *cert);
    discard_cert(*cert);
  }
  bool show = t.accepted || mode == Disclose::kAlways;
  t.guess = a->guess(show ? std::optional<Disclosure>(inst.disclose()) : std::nullopt, arng);
  return t;
}

GameCounts run_ce_indcpa_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t trials, bool b,
                              uint64_t seed, Disclose mode) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  GameCounts c;
  for (size_t i = 0; i < trials; ++i) c.add(ce_trial(prim, adv, lambda, b, trial_seed(seed, 2 * i + b), mode));
  return c;
}

GameStats run_ce_indcpa_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t trials, uint64_t seed,
                             Disclose mode) {
  return {run_ce_indcpa_game(prim, adv, lambda, trials, false, seed, mode),
          run_ce_indcpa_game(prim, adv, lambda, trials, true, seed, mode)};
}

GameTranscript ce_multi_trial(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t k, bool b,
                              uint64_t seed) {
  if (k == 0) throw std::invalid_argument("multi-instance game needs k >= 1");
  Rng rng(seed);
  Rng arng = rng.fork();
  auto reg = qsim::QuantumRegister::create(rng.next());
  GameTranscript t;
  t.b = b;
  t.seed = seed;
  t.accepted = true;
  std::vector<std::unique_ptr<CeAdversary>> advs;
  std::vector<CeInstance> insts;
  std::vector<ce::Encryption> encs;
  advs.reserve(k);
  insts.reserve(k);
  encs.reserve(k);
  for (size_t i = 0; i < k; ++i) {
    advs.push_back(adv());
    insts.emplace_back(prim, lambda, rng);
    auto m = advs[i]->messages(arng);
    check_messages(m);
    if (i == 0) {
      t.m0 = m.first;
      t.m1 = m.second;
    }
    encs.push_back(insts[i].enc(b ? m.second : m.first, reg, rng));
  }
  for (size_t i = 0; i < k; ++i) {
    auto cert = advs[i]->cert(encs[i].ct, reg, arng);
    if (!cert) {
      t.refused = true;
      t.accepted = false;
      continue;
    }
    bool ok = ce::verify(encs[i].vk, *cert);
    discard_cert(*cert);
    t.accepted = t.accepted && ok;
  }
  for (size_t i = 0; i < k; ++i) {
    bool g = advs[i]->guess(t.accepted ? std::optional<Disclosure>(insts[i].disclose()) : std::nullopt, arng);
    if (i == 0) t.guess = g;
  }
  return t;
}

GameStats run_ce_multi_game(CePrimitive prim, const CeFactory& adv, size_t lambda, size_t k, size_t trials,
                            uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be at least 1");
  GameStats s;
  for (size_t i = 0; i < trials; ++i) {
    s.b0.add(ce_multi_trial(prim, adv, lambda, k, false, trial_seed(seed, 2 * i)));
    s.b1.add(ce_multi_trial(prim, adv, lambda, k, true, trial_seed(seed, 2 * i + 1)));
  }
  return s;
}

// ---- Lemma ----

namespace {

uint64_t low_mask(size_t lambda) { return lambda >= 64 ? ~0ull : (1ull << lambda) - 1; }
bool parity64(uint64_t v) { return std::popcount(v) & 1; }

class LemmaHonest : public LemmaStrategy {
 public:
  std::string tag() const override { return "honest-deleter"; }
  uint64_t basis(size_t lambda) const override { return low_mask(lambda); }
  void choices(size_t, bool, uint64_t o, std::vector<LemmaChoice>& out) const override {
    out.push_back({1, o, 0, 0});
  }
  uint32_t rho_range(size_t) const override { return 1; }
};

class LemmaIgnore : public LemmaStrategy {
 public:
  std::string tag() const override { return "ignore-ciphertext"; }
  uint64_t basis(size_t lambda) const override { return low_mask(lambda); }
  void choices(size_t lambda, bool, uint64_t, std::vector<LemmaChoice>& out) const override {
    out.push_back({1, 0, low_mask(lambda), 0});
  }
  uint32_t rho_range(size_t) const override { return 1; }
};

// Computational-basis measurement, guess bt xor parity(o), random cert.
class LemmaComputational : public LemmaStrategy {
 public:
  std::string tag() const override { return "measure-computational"; }
  uint64_t basis(size_t) const override { return 0; }
  void choices(size_t lambda, bool bt, uint64_t o, std::vector<LemmaChoice>& out) const override {
    out.push_back({1, 0, low_mask(lambda), static_cast<uint32_t>(bt != parity64(o))});
  }
  uint32_t rho_range(size_t) const override { return 2; }
};

// Honest deletion that also keeps bt.
class LemmaKeepBit : public LemmaStrategy {
 public:
  std::string tag() const override { return "keep-masked-bit"; }
  uint64_t basis(size_t lambda) const override { return low_mask(lambda); }
  void choices(size_t, bool bt, uint64_t o, std::vector<LemmaChoice>& out) const override {
    out.push_back({1, o, 0, static_cast<uint32_t>(bt)});
  }
  uint32_t rho_range(size_t) const override { return 2; }
};

// Low half computational, high half Hadamard; certifies the Hadamard half,
// guesses on the computational half, and randomizes the guess bit half the
// time.
class LemmaSplit : public LemmaStrategy {
 public:
  std::string tag() const override { return "split-basis"; }
  uint64_t basis(size_t lambda) const override { return low_mask(lambda) & ~low_mask((lambda + 1) / 2); }
  void choices(size_t lambda, bool bt, uint64_t o, std::vector<LemmaChoice>& out) const override {
    uint64_t comp = low_mask((lambda + 1) / 2);
    uint32_t g = bt != parity64(o & comp);
    out.push_back({0.5, o & ~comp, comp, g});
    out.push_back({0.25, o & ~comp, comp, 0});
    out.push_back({0.25, o & ~comp, comp, 1});
  }
  uint32_t rho_range(size_t) const override { return 2; }
};

// Probability that a choice's certificate passes against (z, theta).
double accept_prob(const LemmaChoice& c, uint64_t z, uint64_t theta) {
  if (((c.cert ^ z) & theta & ~c.cert_random) != 0) return 0;
  return std::ldexp(1.0, -std::popcount(theta & c.cert_random));
}

}  // namespace

std::unique_ptr<LemmaStrategy> lemma_strategy(const std::string& tag) {
  if (tag == "honest-deleter") return std::make_unique<LemmaHonest>();
  if (tag == "ignore-ciphertext") return std::make_unique<LemmaIgnore>();
  if (tag == "measure-computational") return std::make_unique<LemmaComputational>();
  if (tag == "keep-masked-bit") return std::make_unique<LemmaKeepBit>();
  if (tag == "split-basis") return std::make_unique<LemmaSplit>();
  throw std::invalid_argument("unknown lemma strategy: " + tag);
}

std::vector<std::string> lemma_strategy_tags() {
  return {"honest-deleter", "ignore-ciphertext", "measure-computational", "keep-masked-bit", "split-basis"};
}

LemmaExact ce_lemma_exact(const LemmaStrategy& s, size_t lambda) {
  if (lambda == 0 || lambda > 10) throw std::invalid_argument("ce_lemma_exact: lambda must be in [1, 10]");
  const uint64_t full = low_mask(lambda);
  const uint64_t beta = s.basis(lambda) & full;
  const size_t cells = 1 + s.rho_range(lambda);
  LemmaExact r;
  r.z0.assign(cells, 0);
  r.z1.assign(cells, 0);
  std::vector<LemmaChoice> ch;
  for (uint64_t theta = 0; theta <= full; ++theta) {
    uint64_t mism = (beta ^ theta) & full;
    double w_base = std::ldexp(1.0, -static_cast<int>(2 * lambda) - std::popcount(mism));
    for (uint64_t z = 0; z <= full; ++z) {
      bool par = parity64(z & ~theta & full);
      uint64_t fixed = z & ~mism;
      // Every submask of mism, including 0.
      for (uint64_t sub = mism;; sub = (sub - 1) & mism) {
        uint64_t o = fixed | sub;
        for (int b = 0; b < 2; ++b) {
          ch.clear();
          s.choices(lambda, static_cast<bool>(b) != par, o, ch);
          auto& dist = b ? r.z1 : r.z0;
          for (const auto& c : ch) {
            if (c.rho + 1 >= cells) throw std::logic_error("lemma strategy rho out of range");
            double acc = accept_prob(c, z, theta);
            dist[1 + c.rho] += w_base * c.prob * acc;
            dist[0] += w_base * c.prob * (1 - acc);
          }
        }
        if (sub == 0) break;
      }
    }
  }
  double d = 0;
  for (size_t i = 0; i < cells; ++i) d += std::abs(r.z0[i] - r.z1[i]);
  r.distance = d / 2;
  return r;
}

LemmaMonteCarlo ce_lemma_monte_carlo(const LemmaStrategy& s, size_t lambda, size_t trials, uint64_t seed) {
  if (lambda == 0 || lambda > 16) throw std::invalid_argument("ce_lemma_monte_carlo: lambda must be in [1, 16]");
  const uint64_t full = low_mask(lambda);
  const uint64_t beta = s.basis(lambda) & full;
  const size_t cells = 1 + s.rho_range(lambda);
  LemmaMonteCarlo mc;
  mc.trials = trials;
  mc.counts0.assign(cells, 0);
  mc.counts1.assign(cells, 0);
  std::vector<size_t> comp_idx, had_idx;
  for (size_t i = 0; i < lambda; ++i) ((beta >> i) & 1 ? had_idx : comp_idx).push_back(i);
  std::vector<LemmaChoice> ch;
  for (int b = 0; b < 2; ++b) {
    for (size_t t = 0; t < trials; ++t) {
      Rng rng(trial_seed(seed, 2 * t + b));
      BitString zb = BitString::random(lambda, rng), thb = BitString::random(lambda, rng);
      uint64_t z = zb.to_uint(), theta = thb.to_uint();
      auto reg = qsim::QuantumRegister::create(rng.next());
      qsim::QubitHandle h = qsim::alloc_bb84(reg, zb, thb);
      uint64_t o = 0;
      if (!comp_idx.empty()) {
        BitString r = qsim::measure(h, comp_idx, qsim::Basis::kComputational);
        for (size_t k = 0; k < comp_idx.size(); ++k) o |= static_cast<uint64_t>(r[k]) << comp_idx[k];
      }
      if (!had_idx.empty()) {
        BitString r = qsim::measure(h, had_idx, qsim::Basis::kHadamard);
        for (size_t k = 0; k < had_idx.size(); ++k) o |= static_cast<uint64_t>(r[k]) << had_idx[k];
      }
      bool bt = static_cast<bool>(b) != parity64(z & ~theta & full);
      ch.clear();
      s.choices(lambda, bt, o, ch);
      double u = std::ldexp(static_cast<double>(rng.next() >> 11), -53);
      size_t pick = ch.size() - 1;
      for (size_t k = 0; k < ch.size(); ++k) {
        if (u < ch[k].prob) {
          pick = k;
          break;
        }
        u -= ch[k].prob;
      }
      const LemmaChoice& c = ch[pick];
      uint64_t cert = (c.cert & ~c.cert_random) | (BitString::random(lambda, rng).to_uint() & c.cert_random);
      bool accepted = ((cert ^ z) & theta & full) == 0;
      auto& counts = b ? mc.counts1 : mc.counts0;
      ++counts[accepted ? 1 + c.rho : 0];
    }
  }
  return mc;
}

bool LemmaCheck::within(double k) const {
  if (sigma == 0) return std::abs(estimate - exact) < 1e-12;
  return std::abs(estimate - exact) <= k * sigma;
}

LemmaCheck compare(const LemmaExact& exact, const LemmaMonteCarlo& mc) {
  if (mc.counts0.size() != exact.z0.size() || mc.trials == 0)
    throw std::invalid_argument("compare: mismatched distributions");
  double q0 = 0, q1 = 0;
  size_t c0 = 0, c1 = 0;
  for (size_t i = 0; i < exact.z0.size(); ++i)
    if (exact.z0[i] > exact.z1[i]) {
      q0 += exact.z0[i];
      q1 += exact.z1[i];
      c0 += mc.counts0[i];
      c1 += mc.counts1[i];
    }
  LemmaCheck r;
  r.exact = q0 - q1;
  r.estimate = frac(c0, mc.trials) - frac(c1, mc.trials);
  r.sigma = std::sqrt(binom_var(q0, mc.trials) + binom_var(q1, mc.trials));
  return r;
}

// ---- Reporting ----

std::string format_table(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(28) << "experiment" << std::setw(24) << "adversary" << std::right << std::setw(7)
     << "lambda" << std::setw(9) << "trials" << "  " << std::left << std::setw(24) << "quantity" << std::right
     << std::setw(11) << "value" << std::setw(11) << "sigma" << std::setw(11) << "target" << '\n';
  os << std::fixed << std::setprecision(6);
  for (const auto& r : rows) {
    os << std::left << std::setw(28) << r.experiment << std::setw(24) << r.adversary << std::right << std::setw(7)
       << r.lambda << std::setw(9) << r.trials << "  " << std::left << std::setw(24) << r.quantity << std::right
       << std::setw(11) << r.value << std::setw(11) << r.sigma;
    if (r.target) os << std::setw(11) << *r.target;
    else os << std::setw(11) << "-";
    os << '\n';
  }
  return os.str();
}

double otcd_guess_acceptance(size_t lambda) {
  // k = number of theta = 1 positions.
  double sum = 0, binom = 1;
  for (size_t k = 0; k <= lambda; ++k) {
    sum += binom * std::ldexp(1.0, -static_cast<int>(lambda + k));
    binom = binom * static_cast<double>(lambda - k) / static_cast<double>(k + 1);
  }
  return sum;
}

}  // namespace everlast::harness
