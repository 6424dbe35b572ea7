// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance checks. Prints one PASS/FAIL line per criterion, preceded by
// indented detail lines, and exits non-zero if any criterion fails.
// Usage: acceptance [criterion numbers...]

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "everlast/ce.hpp"
#include "everlast/codes.hpp"
#include "everlast/fe.hpp"
#include "everlast/garble.hpp"
#include "everlast/harness.hpp"
#include "everlast/oracle.hpp"
#include "everlast/otcd.hpp"
#include "everlast/rnce.hpp"

using namespace everlast;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Result {
  bool pass = true;
  std::string summary;
};

void detail(const std::string& s) { std::cout << "    " << s << std::endl; }

std::string fmt(const char* f, ...) __attribute__((format(printf, 1, 2)));
std::string fmt(const char* f, ...) {
  char buf[512];
  va_list ap;
  va_start(ap, f);
  std::vsnprintf(buf, sizeof buf, f, ap);
  va_end(ap);
  return buf;
}

// Tally of one sub-check; prints a detail line.
struct Tally {
  std::string name;
  size_t ok = 0;
  size_t total = 0;
  void add(bool b) {
    ok += b;
    ++total;
  }
  bool all() const { return total > 0 && ok == total; }
  bool report() const {
    detail(fmt("%-34s %6zu/%-6zu %s", name.c_str(), ok, total, all() ? "ok" : "MISMATCH"));
    return all();
  }
};

ce::Variant variant_for(size_t t) { return t % 2 ? ce::Variant::kCss : ce::Variant::kQrom; }

BitString random_truth_table(size_t bits, Rng& rng) { return BitString::random(size_t{1} << bits, rng); }

bool mux_expect(const BitString& f, const BitString& m, const std::optional<BitString>& got) {
  return got && *got == f.slice(m.to_uint(), 1);
}

field::SparsePolynomial random_poly(const field::Field& f, size_t ell, size_t D, Rng& rng) {
  std::vector<field::Term> terms;
  for (const auto& mono : field::monomials_up_to(ell, D)) terms.push_back({f.random(rng), mono});
  return field::SparsePolynomial(ell, std::move(terms));
}

// Direct evaluation with 128-bit intermediates.
uint64_t naive_eval(uint64_t p, const field::SparsePolynomial& P, const std::vector<uint64_t>& x) {
  unsigned __int128 acc = 0;
  for (const auto& t : P.terms()) {
    unsigned __int128 v = t.coef % p;
    for (size_t i = 0; i < x.size(); ++i)
      for (uint32_t e = 0; e < t.exps[i]; ++e) v = v * x[i] % p;
    acc = (acc + v) % p;
  }
  return static_cast<uint64_t>(acc);
}

garble::Circuit random_circuit(Rng& rng, uint32_t max_gates) {
  uint32_t n = 1 + static_cast<uint32_t>(rng.below(8));
  uint32_t gates = 1 + static_cast<uint32_t>(rng.below(max_gates));
  uint32_t outs = 1 + static_cast<uint32_t>(rng.below(std::min<uint32_t>(gates, 6)));
  return garble::random_leveled_circuit(n, gates, outs, rng);
}

// feq parameters small enough for hundreds of trials: t = 1, N = 2, p = 3.
fe::FeqParams tiny_feq(size_t lambda) {
  return fe::choose_params(lambda, 1, 1, 1, fe::FeqConstants{1.0 / 16, 2, 1.0 / 16, 1}, 3);
}

// ---- 1. decryption correctness ----

Result criterion1() {
  const size_t kTrials = 200;
  auto t0 = Clock::now();
  Rng rng(101);
  bool pass = true;
  size_t total = 0;
  for (size_t lambda : {size_t{8}, size_t{16}}) {
    detail(fmt("lambda = %zu", lambda));
    Tally otcd_t{"otcd"}, ske_q{"ce-ske-qrom"}, ske_c{"ce-ske-css"}, pke_q{"ce-pke-qrom"}, pke_c{"ce-pke-css"},
        rn{"rnce (qrom/css alternating)"}, gb{"garble (vs oracle)"}, f1{"fe1 (mux, 2 index bits)"},
        fd{"fead (mux, 1 index bit)"}, fq{"feq (t=1, N=2, p=3)"};
    for (size_t t = 0; t < kTrials; ++t) {
      auto reg = qsim::QuantumRegister::create(rng.next());
      auto H = crypto::HashOracle::random(rng);
      {
        auto key = otcd::keygen(lambda, 4, rng);
        BitString m = BitString::random(4, rng);
        auto ct = otcd::enc(key, m, reg, rng);
        otcd_t.add(otcd::dec(key, ct) == m);
      }
      for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
        BitString m = BitString::random(4, rng);
        ce::Ske ske(lambda, v, H);
        auto sk = ske.keygen(rng);
        auto e = ske.enc(sk, m, reg, rng);
        (v == ce::Variant::kQrom ? ske_q : ske_c).add(ske.dec(sk, e.ct) == m);
        ce::Pke pke(lambda, v, H);
        auto kp = pke.keygen(rng);
        auto e2 = pke.enc(kp.pk, m, reg, rng);
        (v == ce::Variant::kQrom ? pke_q : pke_c).add(pke.dec(kp.sk, e2.ct) == m);
      }
      {
        rnce::Scheme s(lambda, variant_for(t), H);
        auto [pk, msk] = s.setup(4, rng);
        auto sk = s.keygen(msk, rng);
        BitString m = BitString::random(4, rng);
        auto e = s.enc(pk, m, reg, rng);
        rn.add(s.dec(sk, e.ct) == m);
      }
      {
        garble::Scheme s(lambda, H);
        auto c = random_circuit(rng, 16);
        BitString x = BitString::random(c.n_inputs, rng);
        auto labels = s.setup(c.n_inputs, rng);
        auto [gc, vk] = s.garble(c, labels, reg, rng);
        gb.add(s.eval(gc, garble::select_labels(labels, x)) == oracle::circuit_eval(c, x));
      }
      {
        fe::Fe1 s(lambda, variant_for(t), H, fe::universal::mux(2, 1));
        auto [mpk, msk] = s.setup(rng);
        BitString f = random_truth_table(2, rng);
        BitString m = BitString::random(2, rng);
        auto sk = s.keygen(msk, f);
        auto e = s.enc(mpk, m, reg, rng);
        f1.add(mux_expect(f, m, s.dec(sk, e.ct)));
      }
      {
        fe::Fead s(lambda, variant_for(t), H, fe::universal::mux(1, 1));
        auto [mpk, msk] = s.setup(rng);
        BitString f = random_truth_table(1, rng);
        BitString m = BitString::random(1, rng);
        auto sk = s.keygen(msk, f, rng);
        auto e = s.enc(mpk, m, reg, rng);
        fd.add(mux_expect(f, m, s.dec(sk, e.ct)));
      }
      {
        fe::FeqParams p = tiny_feq(lambda);
        fe::Feq s(p, variant_for(t), H, fe::FeqInner::kNonAdaptive);
        auto [mpk, msk] = s.setup(rng);
        auto C = random_poly(s.field(), p.ell, p.D, rng);
        std::vector<uint64_t> x{s.field().random(rng)};
        auto sk = s.keygen(msk, C, rng);
        auto e = s.enc(mpk, x, reg, rng);
        fq.add(s.dec(sk, e.ct) == oracle::poly_eval(s.field(), C, x));
      }
    }
    for (const Tally* tl : {&otcd_t, &ske_q, &ske_c, &pke_q, &pke_c, &rn, &gb, &f1, &fd, &fq}) {
      pass &= tl->report();
      total += tl->total;
    }
  }
  double secs = seconds_since(t0);
  bool fast = secs < 300;
  return {pass && fast, fmt("decryption correctness: %zu round trips, %s; %.1f s (limit 300 s)", total,
                            pass ? "all exact" : "MISMATCHES", secs)};
}

// ---- 2. verification correctness, plain and under a quantum one-time pad ----

// Masks every qubit of the ciphertext with Z^c X^a, deletes, corrects the
// certificate, and verifies.
template <class Ct, class DelFn, class VrfyFn, class ModFn>
bool masked_round(Ct& ct, const ce::Layout& layout, std::vector<qsim::QubitHandle*> segs, Rng& rng, DelFn del,
                  ModFn modify, VrfyFn vrfy) {
  size_t q = ce::layout_qubits(layout);
  BitString a = BitString::random(q, rng), c = BitString::random(q, rng);
  ce::mask(segs, a, c);
  auto cert = del(ct);
  modify(layout, a, c, cert);
  return vrfy(cert);
}

Result criterion2() {
  const size_t kTrials = 200;
  const size_t lambda = 8;
  Rng rng(202);
  Tally otcd_p{"otcd"}, otcd_m{"otcd, pad + modify"};
  std::array<Tally, 4> ce_p{Tally{"ce-ske-qrom"}, Tally{"ce-ske-css"}, Tally{"ce-pke-qrom"}, Tally{"ce-pke-css"}};
  std::array<Tally, 4> ce_m{Tally{"ce-ske-qrom, pad + modify"}, Tally{"ce-ske-css, pad + modify"},
                            Tally{"ce-pke-qrom, pad + modify"}, Tally{"ce-pke-css, pad + modify"}};
  Tally rn_p{"rnce"}, rn_m{"rnce, pad + modify"}, gb_p{"garble"}, gb_m{"garble, pad + modify"}, f1_p{"fe1"},
      f1_m{"fe1, pad + modify"}, fd_p{"fead (masked by construction)"}, fq_p{"feq"};
  auto ce_modify = [](const ce::Layout& l, const BitString& a, const BitString& c, ce::CertBundle& cert) {
    ce::modify(l, a, c, cert);
  };
  for (size_t t = 0; t < kTrials; ++t) {
    auto reg = qsim::QuantumRegister::create(rng.next());
    auto H = crypto::HashOracle::random(rng);
    {
      auto key = otcd::keygen(lambda, 3, rng);
      BitString m = BitString::random(3, rng);
      auto ct = otcd::enc(key, m, reg, rng);
      otcd_p.add(otcd::vrfy(key, otcd::del(ct)));
      auto ct2 = otcd::enc(key, m, reg, rng);
      BitString a = BitString::random(key.theta.size(), rng), b = BitString::random(key.theta.size(), rng);
      qsim::apply_pauli(ct2.qubits, a, b);
      otcd_m.add(otcd::vrfy(key, otcd::modify(a, b, otcd::del(ct2))));
    }
    for (size_t k = 0; k < 4; ++k) {
      ce::Variant v = k % 2 ? ce::Variant::kCss : ce::Variant::kQrom;
      BitString m = BitString::random(3, rng);
      auto enc = [&]() {
        if (k < 2) {
          ce::Ske s(lambda, v, H);
          return s.enc(s.keygen(rng), m, reg, rng);
        }
        ce::Pke s(lambda, v, H);
        return s.enc(s.keygen(rng).pk, m, reg, rng);
      };
      auto e = enc();
      auto cert = ce::del(e.ct);
      ce_p[k].add(ce::verify(e.vk, cert));
      auto e2 = enc();
      ce_m[k].add(masked_round(
          e2.ct, ce::layout(e2.ct), ce::segments(e2.ct), rng, [](auto& ct) { return ce::del(ct); }, ce_modify,
          [&](ce::CertBundle& c) { return ce::verify(e2.vk, c); }));
    }
    {
      rnce::Scheme s(lambda, variant_for(t), H);
      auto [pk, msk] = s.setup(3, rng);
      BitString m = BitString::random(3, rng);
      auto e = s.enc(pk, m, reg, rng);
      auto cert = rnce::del(e.ct);
      rn_p.add(rnce::vrfy(e.vk, cert));
      auto e2 = s.enc(pk, m, reg, rng);
      rn_m.add(masked_round(
          e2.ct, rnce::layout(e2.ct), rnce::segments(e2.ct), rng, [](auto& ct) { return rnce::del(ct); }, ce_modify,
          [&](ce::CertBundle& c) { return rnce::vrfy(e2.vk, c); }));
    }
    {
      garble::Scheme s(lambda, H);
      auto c = random_circuit(rng, 16);
      auto labels = s.setup(c.n_inputs, rng);
      auto [gc, vk] = s.garble(c, labels, reg, rng);
      auto cert = garble::del(gc);
      gb_p.add(garble::vrfy(vk, cert));
      auto [gc2, vk2] = s.garble(c, labels, reg, rng);
      gb_m.add(masked_round(
          gc2, garble::layout(gc2), garble::segments(gc2), rng, [](auto& ct) { return garble::del(ct); }, ce_modify,
          [&, &vk2 = vk2](ce::CertBundle& cc) { return garble::vrfy(vk2, cc); }));
    }
    {
      fe::Fe1 s(lambda, variant_for(t), H, fe::universal::mux(2, 1));
      auto [mpk, msk] = s.setup(rng);
      BitString m = BitString::random(2, rng);
      auto e = s.enc(mpk, m, reg, rng);
      auto cert = fe::del(e.ct);
      f1_p.add(fe::vrfy(e.vk, cert));
      auto e2 = s.enc(mpk, m, reg, rng);
      f1_m.add(masked_round(
          e2.ct, fe::layout(e2.ct), fe::segments(e2.ct), rng, [](auto& ct) { return fe::del(ct); },
          [](const ce::Layout& l, const BitString& a, const BitString& c, ce::CertBundle& cert) {
            fe::modify(l, a, c, cert);
          },
          [&](ce::CertBundle& c) { return fe::vrfy(e2.vk, c); }));
    }
    {
      fe::Fead s(lambda, variant_for(t), H, fe::universal::mux(1, 1));
      auto [mpk, msk] = s.setup(rng);
      auto e = s.enc(mpk, BitString::random(1, rng), reg, rng);
      auto cert = fe::del(e.ct);
      fd_p.add(fe::vrfy(e.vk, cert));
    }
    {
      fe::Feq s(tiny_feq(lambda), variant_for(t), H, fe::FeqInner::kNonAdaptive);
      auto [mpk, msk] = s.setup(rng);
      auto e = s.enc(mpk, {s.field().random(rng)}, reg, rng);
      auto cert = fe::del(e.ct);
      fq_p.add(fe::vrfy(e.vk, cert));
    }
  }
  bool pass = true;
  for (const Tally* tl : {&otcd_p, &otcd_m, &ce_p[0], &ce_m[0], &ce_p[1], &ce_m[1], &ce_p[2], &ce_m[2], &ce_p[3],
                          &ce_m[3], &rn_p, &rn_m, &gb_p, &gb_m, &f1_p, &f1_m, &fd_p, &fq_p})
    pass &= tl->report();
  return {pass, fmt("verification correctness: honest delete-verify and pad-modify-verify, %zu trials each, %s",
                    kTrials, pass ? "all accepted" : "REJECTIONS")};
}

// ---- 3. wrong-key SKE gives bottom ----

Result criterion3() {
  const size_t kTrials = 10000;
  const size_t lambda = 8;
  Rng rng(303);
  Tally classical{"classical ske"}, q{"ce-ske-qrom"}, c{"ce-ske-css"};
  auto H = crypto::HashOracle::random(rng);
  ce::Ske sq(lambda, ce::Variant::kQrom, H), sc(lambda, ce::Variant::kCss, H);
  auto reg = qsim::QuantumRegister::create(rng.next());
  for (size_t t = 0; t < kTrials; ++t) {
    auto k1 = crypto::ske_keygen(lambda, rng);
    auto k2 = crypto::ske_keygen(lambda, rng);
    if (k1 == k2) {
      --t;
      continue;
    }
    classical.add(!crypto::ske_dec(k2, crypto::ske_enc(k1, rng.bytes(4), rng)));
    BitString m = BitString::random(2, rng);
    auto e1 = sq.enc(k1, m, reg, rng);
    q.add(!sq.dec(k2, e1.ct));
    qsim::discard(std::get<ce::QromCiphertext>(e1.ct).body.qubits);
    auto e2 = sc.enc(k1, m, reg, rng);
    c.add(!sc.dec(k2, e2.ct));
    for (auto* h : ce::segments(e2.ct))
      if (h->valid()) qsim::discard(*h);
  }
  bool pass = classical.report() & q.report() & c.report();
  return {pass, fmt("special correctness: wrong-key decryption gave bottom in %zu/%zu, %zu/%zu, %zu/%zu trials",
                    classical.ok, classical.total, q.ok, q.total, c.ok, c.total)};
}

// ---- 4. uniform-guess certificate acceptance ----

Result criterion4() {
  const size_t kTrials = 100000;
  bool pass = true;
  std::string sum;
  auto adv = harness::otcd_adversary("cert-guesser");
  for (size_t lambda : {size_t{4}, size_t{8}}) {
    auto st = harness::run_otcd_game(adv, lambda, kTrials / 2, 404 + lambda);
    double target = harness::otcd_guess_acceptance(lambda);
    double sigma = std::sqrt(target * (1 - target) / static_cast<double>(kTrials));
    double z = (st.acceptance() - target) / sigma;
    bool ok = std::abs(z) <= 3;
    pass &= ok;
    detail(fmt("lambda=%zu: %zu trials, acceptance %.5f, (3/4)^lambda %.5f, sigma %.5f, z %+.2f %s", lambda,
               kTrials, st.acceptance(), target, sigma, z, ok ? "ok" : "OUTSIDE 3 sigma"));
    sum += fmt(" lambda=%zu z=%+.2f", lambda, z);
  }
  return {pass, "forged-certificate acceptance matches (3/4)^lambda within 3 sigma:" + sum};
}

// ---- 5. certified-deletion lemma: exact enumeration vs sampling ----

Result criterion5() {
  auto t0 = Clock::now();
  bool pass = true;
  auto honest = harness::lemma_strategy("honest-deleter");
  double worst_honest = 0;
  for (size_t lambda = 1; lambda <= 10; ++lambda)
    worst_honest = std::max(worst_honest, harness::ce_lemma_exact(*honest, lambda).distance);
  bool honest_ok = worst_honest == 0.0;
  pass &= honest_ok;
  detail(fmt("honest-deleter exact distance, lambda 1..10: max %.3g %s", worst_honest, honest_ok ? "ok" : "NONZERO"));
  double worst_z = 0;
  size_t checks = 0;
  for (const auto& tag : harness::lemma_strategy_tags()) {
    auto s = harness::lemma_strategy(tag);
    for (size_t lambda = 1; lambda <= 6; ++lambda) {
      auto ex = harness::ce_lemma_exact(*s, lambda);
      auto mc = harness::ce_lemma_monte_carlo(*s, lambda, 20000, 500 + lambda);
      auto c = harness::compare(ex, mc);
      bool ok = c.within(3);
      pass &= ok;
      ++checks;
      double z = c.sigma > 0 ? (c.estimate - c.exact) / c.sigma : 0.0;
      worst_z = std::max(worst_z, std::abs(z));
      detail(fmt("%-22s lambda=%zu exact %.5f sampled %.5f sigma %.5f %s", tag.c_str(), lambda, c.exact, c.estimate,
                 c.sigma, ok ? "ok" : "OUTSIDE 3 sigma"));
    }
  }
  double secs = seconds_since(t0);
  bool fast = secs < 120;
  return {pass && fast, fmt("lemma: honest distance exactly 0 up to lambda 10; %zu sampled checks, worst |z| %.2f; "
                            "%.1f s (limit 120 s)",
                            checks, worst_z, secs)};
}

// ---- 6. teleportation ----

// Upper tail of chi-square with 3 degrees of freedom.
double chi2_3_pvalue(double x) {
  return std::erfc(std::sqrt(x / 2)) + std::sqrt(2 * x / M_PI) * std::exp(-x / 2);
}

bool same_ray(const std::vector<qsim::Amp>& a, const std::vector<qsim::Amp>& b) {
  if (a.size() != b.size()) return false;
  qsim::Amp inner = 0;
  for (size_t i = 0; i < a.size(); ++i) inner += std::conj(a[i]) * b[i];
  return std::abs(std::abs(inner) - 1) < 1e-12;
}

Result criterion6() {
  const size_t kTrials = 10000;
  auto reg = qsim::QuantumRegister::create(606);
  Rng rng(606);
  std::array<size_t, 4> counts{};
  for (size_t t = 0; t < kTrials; ++t) {
    auto src = qsim::alloc_bb84(reg, BitString::random(1, rng), BitString::random(1, rng));
    auto [a, b] = qsim::alloc_bell_pairs(reg, 1);
    auto [x, z] = qsim::bell_measure(src, a);
    counts[2 * x[0] + z[0]]++;
    qsim::discard(b);
  }
  double chi2 = 0;
  for (size_t c : counts) chi2 += std::pow(static_cast<double>(c) - kTrials / 4.0, 2) / (kTrials / 4.0);
  double p = chi2_3_pvalue(chi2);
  bool uniform = p > 0.01;
  detail(fmt("(x,z) counts %zu %zu %zu %zu over %zu trials: chi2 %.3f, p %.4f %s", counts[0], counts[1], counts[2],
             counts[3], kTrials, chi2, p, uniform ? "ok" : "NOT UNIFORM"));
  bool exact = true;
  for (int prep = 0; prep < 4; ++prep) {
    bool zb = prep & 1, th = prep >> 1;
    Tally tl{fmt("prep |%d> in %s basis", zb, th ? "Hadamard" : "computational")};
    for (int t = 0; t < 250; ++t) {
      auto src = qsim::alloc_bb84(reg, BitString::from_uint(zb, 1), BitString::from_uint(th, 1));
      auto expect = qsim::state_vector(src);
      auto [a, b] = qsim::alloc_bell_pairs(reg, 1);
      auto [x, z] = qsim::bell_measure(src, a);
      qsim::apply_pauli_inverse(b, x, z);
      bool ok = same_ray(qsim::state_vector(b), expect);
      ok &= qsim::measure_all(b, th ? qsim::Basis::kHadamard : qsim::Basis::kComputational)[0] == zb;
      tl.add(ok);
    }
    exact &= tl.report();
  }
  return {uniform && exact, fmt("teleportation: (x,z) chi2 p = %.4f (> 0.01), corrected states %s", p,
                                exact ? "equal the source for all four BB84 preparations" : "DIFFER")};
}

// ---- 7. garbling vs oracle, simulators ----

Result criterion7() {
  const size_t kCircuits = 200;
  Rng rng(707);
  garble::Scheme s(8, crypto::HashOracle::random(rng));
  Tally real{"eval(garble(C)) = oracle C(x)"}, sim{"eval(sim) = C(x)"}, shape{"sim shape = real shape"},
      hyb{"inputdep j=q: eval = sim eval"}, hyb_shape{"inputdep j=q shape = sim shape"};
  size_t max_gates = 0;
  for (size_t t = 0; t < kCircuits; ++t) {
    auto reg = qsim::QuantumRegister::create(rng.next());
    auto c = random_circuit(rng, 64);
    max_gates = std::max(max_gates, c.gates.size());
    BitString x = BitString::random(c.n_inputs, rng);
    BitString y = oracle::circuit_eval(c, x);
    auto labels = s.setup(c.n_inputs, rng);
    auto in = garble::select_labels(labels, x);
    auto [gc, vk] = s.garble(c, labels, reg, rng);
    auto real_shape = garble::shape(gc);
    real.add(s.eval(gc, in) == y);
    auto [sg, svk] = s.sim_garble(c.topology(), y, in, reg, rng);
    shape.add(garble::shape(sg) == real_shape && svk.parts.size() == vk.parts.size());
    auto sim_out = s.eval(sg, in);
    sim.add(sim_out == y);
    auto [hg, hvk] = s.inputdep_sim_upto(c, x, in, c.gates.size(), reg, rng);
    hyb_shape.add(garble::shape(hg) == real_shape);
    hyb.add(s.eval(hg, in) == sim_out);
  }
  bool pass = real.report() & sim.report() & shape.report() & hyb.report() & hyb_shape.report();
  return {pass, fmt("garbling: %zu random leveled circuits (up to %zu gates) %s", kCircuits, max_gates,
                    pass ? "match the oracle and the simulators" : "MISMATCH")};
}

// ---- 8. feq interpolation ----

Result criterion8() {
  const size_t kTrials = 20;
  auto t0 = Clock::now();
  fe::FeqParams p = fe::choose_params(8, 2, 2, 2, fe::FeqConstants{0.25, 17.0 / 128, 0.125, 1});
  detail(fmt("lambda=%zu q=%zu D=%zu ell=%zu t=%zu tD+1=%zu N=%zu v=%zu S=%zu p=%llu, non-adaptive inner", p.lambda,
             p.q, p.D, p.ell, p.t, p.t * p.D + 1, p.N, p.v, p.S, static_cast<unsigned long long>(p.p)));
  bool params_ok = p.lambda == 8 && p.q == 2 && p.D == 2 && p.t == 8 && p.t * p.D + 1 == 17 && p.N >= 17 && p.p == 257;
  Rng rng(808);
  Tally tl{"dec = poly_eval(C, x) mod p"};
  for (size_t t = 0; t < kTrials; ++t) {
    fe::Feq s(p, variant_for(t), crypto::HashOracle::random(rng), fe::FeqInner::kNonAdaptive);
    auto [mpk, msk] = s.setup(rng);
    auto C = random_poly(s.field(), p.ell, p.D, rng);
    auto sk = s.keygen(msk, C, rng);
    std::vector<uint64_t> x(p.ell);
    for (auto& v : x) v = s.field().random(rng);
    uint64_t want = oracle::poly_eval(s.field(), C, x);
    auto reg = qsim::QuantumRegister::create(rng.next());
    std::optional<uint64_t> got;
    {
      auto e = s.enc(mpk, x, reg, rng);
      got = s.dec(sk, e.ct);
    }
    bool ok = got == want && want == naive_eval(p.p, C, x);
    tl.add(ok);
    if (!ok) detail(fmt("trial %zu: C = %s, got %lld, want %llu", t, C.to_string().c_str(),
                        got ? static_cast<long long>(*got) : -1LL, static_cast<unsigned long long>(want)));
  }
  bool pass = tl.report() && params_ok;
  double secs = seconds_since(t0);
  bool fast = secs < 600;
  return {pass && fast, fmt("feq interpolation: %zu/%zu decryptions equal C(x) mod %llu; %.1f s (limit 600 s)", tl.ok,
                            tl.total, static_cast<unsigned long long>(p.p), secs)};
}

// ---- 9. RNCE fake/reveal ----

Result criterion9() {
  const size_t kTrials = 200;
  Rng rng(909);
  bool pass = true;
  size_t ok = 0, total = 0;
  for (ce::Variant v : {ce::Variant::kQrom, ce::Variant::kCss}) {
    rnce::Scheme s(8, v, crypto::HashOracle::random(rng));
    Tally tl{fmt("n=8, %s", ce::variant_name(v))};
    for (size_t t = 0; t < kTrials; ++t) {
      auto reg = qsim::QuantumRegister::create(rng.next());
      auto [pk, msk] = s.setup(8, rng);
      auto [e, aux] = s.fake(pk, reg, rng);
      BitString m = BitString::random(8, rng);
      tl.add(s.dec(s.reveal(pk, msk, aux, m), e.ct) == m);
    }
    pass &= tl.report();
    ok += tl.ok;
    total += tl.total;
  }
  return {pass, fmt("rnce fake/reveal: dec(reveal(m), fake ct) = m in %zu/%zu trials", ok, total)};
}

// ---- 10. coset representatives ----

// Codewords by enumerating all sums of the given rows.
std::set<uint64_t> span(const std::vector<const char*>& rows) {
  std::set<uint64_t> out;
  for (uint64_t m = 0; m < (uint64_t{1} << rows.size()); ++m) {
    uint64_t w = 0;
    for (size_t r = 0; r < rows.size(); ++r)
      if ((m >> r) & 1) w ^= BitString::from_string(rows[r]).to_uint();
    out.insert(w);
  }
  return out;
}

Result criterion10() {
  auto pair = codes::CssPair::hamming7();
  const auto c1 = span({"1000110", "0100101", "0010011", "0001111"});
  const auto c2 = span({"1101100", "1011010", "0111001"});
  bool structure = c1.size() == 16 && c2.size() == 8;
  for (uint64_t w : c2) structure &= c1.count(w) == 1;
  // C2 is the dual of C1.
  for (uint64_t a : c1)
    for (uint64_t b : c2) structure &= __builtin_popcountll(a & b) % 2 == 0;
  detail(fmt("|C1| = %zu, |C2| = %zu, C2 = dual of C1 inside C1: %s", c1.size(), c2.size(), structure ? "ok" : "NO"));
  bool pass = structure;
  struct Case {
    const char* name;
    const codes::LinearCode* code;
    const std::set<uint64_t>* words;
    const std::set<uint64_t>* outer;  // nullptr = whole space
  };
  for (const Case& k : {Case{"mod C2 (D = C1)", &pair.c2(), &c2, &c1}, Case{"mod C1 (D = {0,1}^7)", &pair.c1(), &c1, nullptr}}) {
    Tally iff{fmt("%s: equal iff x - x' in C", k.name)}, in_d{fmt("%s: x in D => x mod C in D", k.name)},
        idem{fmt("%s: idempotent", k.name)};
    for (uint64_t x = 0; x < 128; ++x) {
      BitString bx = BitString::from_uint(x, 7);
      BitString rx = k.code->coset_mod(bx);
      idem.add(k.code->coset_mod(rx) == rx);
      if (!k.outer || k.outer->count(x)) in_d.add(!k.outer || k.outer->count(rx.to_uint()) == 1);
      for (uint64_t y = 0; y < 128; ++y)
        iff.add((k.code->coset_mod(BitString::from_uint(y, 7)) == rx) == (k.words->count(x ^ y) == 1));
    }
    pass &= iff.report() & in_d.report() & idem.report();
  }
  return {pass, fmt("coset algebra: three mod-C properties %s exhaustively over {0,1}^7",
                    pass ? "hold" : "FAIL")};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Result()>> criteria = {criterion1, criterion2, criterion3, criterion4, criterion5,
                                                         criterion6, criterion7, criterion8, criterion9, criterion10};
  std::set<size_t> only;
  for (int i = 1; i < argc; ++i) {
    size_t k = std::strtoul(argv[i], nullptr, 10);
    if (k < 1 || k > criteria.size()) {
      std::cerr << "usage: acceptance [1-" << criteria.size() << "]...\n";
      return 1;
    }
    only.insert(k);
  }
  size_t failed = 0, run = 0;
  for (size_t k = 1; k <= criteria.size(); ++k) {
    if (!only.empty() && !only.count(k)) continue;
    std::cout << "[" << k << "]" << std::endl;
    auto t0 = Clock::now();
    Result r;
    try {
      r = criteria[k - 1]();
    } catch (const std::exception& e) {
      r = {false, std::string("threw: ") + e.what()};
    }
    ++run;
    failed += !r.pass;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << k << ": " << r.summary
              << fmt(" (%.1f s)", seconds_since(t0)) << std::endl;
  }
  std::cout << run - failed << "/" << run << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
