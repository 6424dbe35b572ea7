// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// everlast: command-line driver for every primitive, the security
// experiments, and the feq parameter table.
//
// Artifacts are .eca files. dec and del rename the ciphertext to
// <file>.consumed and vrfy does the same with the certificate, standing in
// for the no-cloning of the simulated quantum state they hold.
//
// Exit codes: 0 success, 2 decryption failure or rejected certificate,
// 1 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "everlast/artifact.hpp"
#include "everlast/serial.hpp"

using namespace everlast;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBottom = 2;

const std::vector<std::string> kPrimitives = {"otcd",  "ce-ske-qrom", "ce-ske-css", "ce-pke-qrom", "ce-pke-css",
                                              "rnce",  "garble",      "fe1",        "fead",        "feq"};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Opts {
  std::string prim;
  size_t lambda = 8;
  std::optional<uint64_t> seed;
  std::optional<size_t> n;
  std::string params;
  std::string variant = "qrom";
  std::string inner;
  uint64_t p = 0;
  std::string out = "out";
  std::optional<size_t> trials;
  std::string key, pk, sk, msk, mpk, ct, vk, cert;
  std::string msg, func, circuit, input;
  std::string game, adversary = "all";
};

// Public parameters carried at the front of every artifact payload.
struct Setup {
  std::string prim;
  uint64_t lambda = 0;
  uint8_t variant = 0;
  crypto::HashOracle H;
  uint64_t n = 0;
  uint64_t out_bits = 1;
  fe::FeqParams feq;
  uint8_t inner = 0;
};

void put_setup(serial::Writer& w, const Setup& s) {
  w.bytes(Bytes(s.prim.begin(), s.prim.end()));
  w.u64(s.lambda);
  w.u8(s.variant);
  serial::put(w, s.H);
  w.u64(s.n);
  w.u64(s.out_bits);
  serial::put(w, s.feq);
  w.u8(s.inner);
}

Setup get_setup(serial::Reader& r) {
  Setup s;
  Bytes p = r.bytes();
  s.prim.assign(p.begin(), p.end());
  s.lambda = r.u64();
  s.variant = r.u8();
  if (s.variant > 1) throw FormatError("bad variant in artifact");
  serial::get(r, s.H);
  s.n = r.u64();
  s.out_bits = r.u64();
  serial::get(r, s.feq);
  s.inner = r.u8();
  if (s.lambda == 0 || s.lambda > 4096) throw FormatError("bad lambda in artifact");
  return s;
}

Bytes setup_bytes(const Setup& s) {
  serial::Writer w;
  put_setup(w, s);
  return std::move(w).take();
}

ce::Variant variant_of(const Setup& s) { return s.variant ? ce::Variant::kCss : ce::Variant::kQrom; }

struct Session {
  Rng rng;
  qsim::RegisterPtr reg;
  explicit Session(uint64_t seed) : rng(seed), reg(qsim::QuantumRegister::create(rng.next())) {}
};

std::string path_for(const Opts& o, const std::string& role) { return o.out + "." + role + ".eca"; }

template <class T>
void save(const std::string& path, const Setup& s, const std::string& role, const T& body) {
  serial::Writer w;
  put_setup(w, s);
  serial::put(w, body);
  artifact::write(path, {s.prim + "." + role, std::move(w).take()});
  std::cout << "wrote " << path << "\n";
}

template <class T>
T load(const std::string& path, const std::string& prim, const std::string& role, Setup& s,
       const qsim::RegisterPtr& reg) {
  if (path.empty()) throw UsageError("missing --" + role + " file for " + prim);
  auto a = artifact::read(path, prim + "." + role);
  serial::Reader r(a.payload, reg);
  Setup got = get_setup(r);
  if (got.prim != prim) throw FormatError(path + " belongs to " + got.prim);
  if (!s.prim.empty() && setup_bytes(got) != setup_bytes(s))
    throw FormatError(path + " comes from a different setup than the other inputs");
  s = got;
  T v;
  serial::get(r, v);
  r.finish();
  return v;
}

BitString parse_bits(const std::string& s, const std::string& what) {
  if (s.empty()) throw UsageError("missing " + what);
  for (char c : s)
    if (c != '0' && c != '1') throw UsageError(what + " must be a string of 0/1 characters");
  return BitString::from_string(s);
}

std::vector<uint64_t> parse_elements(const std::string& s) {
  std::vector<uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stoull(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad field element '" + item + "'");
    }
  }
  if (out.empty()) throw UsageError("missing --msg field elements");
  return out;
}

// "3*x0^2*x1 + 5 + x1": terms separated by '+', factors by '*'.
field::SparsePolynomial parse_poly(const std::string& text, size_t nvars, const field::Field& f) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw UsageError("missing --func polynomial");
  std::vector<field::Term> terms;
  std::stringstream ss(s);
  std::string term;
  while (std::getline(ss, term, '+')) {
    field::Term t{1, std::vector<uint32_t>(nvars, 0)};
    std::stringstream ts(term);
    std::string fac;
    while (std::getline(ts, fac, '*')) {
      try {
        if (!fac.empty() && fac[0] == 'x') {
          size_t caret = fac.find('^');
          size_t var = std::stoul(fac.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
          uint32_t e = caret == std::string::npos ? 1 : static_cast<uint32_t>(std::stoul(fac.substr(caret + 1)));
          if (var >= nvars) throw UsageError("variable x" + std::to_string(var) + " out of range");
          t.exps[var] += e;
        } else {
          t.coef = f.mul(t.coef, std::stoull(fac) % f.p());
        }
      } catch (const UsageError&) {
        throw;
      } catch (const std::exception&) {
        throw UsageError("cannot parse polynomial factor '" + fac + "'");
      }
    }
    terms.push_back(std::move(t));
  }
  return field::SparsePolynomial(nvars, std::move(terms));
}

std::vector<double> parse_doubles(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw UsageError("bad --params entry '" + item + "'");
    }
  }
  return out;
}

fe::FeqParams feq_params(const Opts& o) {
  std::string text = o.params.empty() ? "2,2,2,0.25,0.1328125,0.125,1" : o.params;
  auto v = parse_doubles(text);
  if (v.size() != 7) throw UsageError("--params expects q,D,ell,ct,cN,cv,cS");
  auto whole = [](double x) {
    if (x < 1 || x != std::floor(x)) throw UsageError("q, D and ell must be positive integers");
    return static_cast<size_t>(x);
  };
  return fe::choose_params(o.lambda, whole(v[0]), whole(v[1]), whole(v[2]), fe::FeqConstants{v[3], v[4], v[5], v[6]},
                           o.p);
}

ce::Variant parse_variant(const std::string& v) {
  if (v == "qrom") return ce::Variant::kQrom;
  if (v == "css") return ce::Variant::kCss;
  throw UsageError("--variant must be qrom or css");
}

fe::FeqInner parse_inner(const std::string& v) {
  if (v.empty()) return fe::kDefaultFeqInner;
  if (v == "adaptive") return fe::FeqInner::kAdaptive;
  if (v == "non-adaptive") return fe::FeqInner::kNonAdaptive;
  throw UsageError("--inner must be adaptive or non-adaptive");
}

garble::Circuit read_circuit(const std::string& path, size_t n, Rng& rng) {
  if (path.empty() || path == "random") {
    uint32_t gates = 16;
    return garble::random_leveled_circuit(static_cast<uint32_t>(n), gates, std::min<uint32_t>(4, gates), rng);
  }
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open circuit file " + path);
  std::optional<garble::CircuitBuilder> b;
  std::string line;
  size_t lineno = 0;
  while (std::getline(f, line)) {
    ++lineno;
    std::stringstream ls(line);
    std::string word;
    if (!(ls >> word) || word[0] == '#') continue;
    auto bad = [&] { return UsageError(path + ":" + std::to_string(lineno) + ": cannot parse '" + line + "'"); };
    if (word == "inputs") {
      uint32_t k;
      if (!(ls >> k) || b || k != n) throw bad();
      b.emplace(k);
    } else if (word == "gate") {
      unsigned table;
      uint32_t a, c;
      if (!b || !(ls >> table >> a >> c) || table > 15) throw bad();
      b->gate(static_cast<uint8_t>(table), a, c);
    } else if (word == "outputs") {
      if (!b) throw bad();
      std::vector<uint32_t> outs;
      uint32_t w;
      while (ls >> w) outs.push_back(w);
      return std::move(*b).finish(std::move(outs));
    } else {
      throw bad();
    }
  }
  throw UsageError(path + ": missing 'outputs' line (or 'inputs' does not match --n)");
}

Setup new_setup(const Opts& o, Rng& rng) {
  Setup s;
  s.prim = o.prim;
  s.lambda = o.lambda;
  s.H = crypto::HashOracle::random(rng);
  if (o.prim.rfind("ce-", 0) == 0) s.variant = o.prim.ends_with("css");
  else s.variant = parse_variant(o.variant) == ce::Variant::kCss;
  if (o.prim == "otcd") s.n = o.n.value_or(8);
  if (o.prim == "rnce") s.n = o.n.value_or(8);
  if (o.prim == "garble") s.n = o.n.value_or(4);
  if (o.prim == "fe1") s.n = o.n.value_or(2);
  if (o.prim == "fead") s.n = o.n.value_or(1);
  if (o.prim == "feq") {
    s.feq = feq_params(o);
    s.inner = static_cast<uint8_t>(parse_inner(o.inner));
  }
  return s;
}

fe::Universal mux_of(const Setup& s) {
  if (s.n == 0 || s.n > 10) throw UsageError("fe index width --n must be in [1, 10]");
  return fe::universal::mux(s.n, s.out_bits);
}

// ---- Generic command bodies ----

int report_dec(const std::optional<BitString>& m) {
  if (!m) {
    std::cout << "bottom: decryption rejected\n";
    return kBottom;
  }
  std::cout << m->to_string() << "\n";
  return kOk;
}

int report_vrfy(bool ok) {
  std::cout << (ok ? "ACCEPT" : "REJECT") << "\n";
  return ok ? kOk : kBottom;
}

template <class Ct, class Cert, class DelFn>
int do_del(const Opts& o, Session& ss, DelFn del) {
  Setup s;
  auto ct = load<Ct>(o.ct, o.prim, "ct", s, ss.reg);
  Cert c = del(ct);
  artifact::consume(o.ct);
  save(path_for(o, "cert"), s, "cert", c);
  return kOk;
}

template <class Vk, class Cert, class VrfyFn>
int do_vrfy(const Opts& o, Session& ss, VrfyFn vrfy) {
  Setup s;
  auto vk = load<Vk>(o.vk, o.prim, "vk", s, ss.reg);
  auto cert = load<Cert>(o.cert, o.prim, "cert", s, ss.reg);
  bool ok = vrfy(vk, cert);
  artifact::consume(o.cert);
  return report_vrfy(ok);
}

// ---- Per-primitive commands ----

int cmd_keygen(const Opts& o, Session& ss) {
  Rng& rng = ss.rng;
  const std::string& p = o.prim;
  if (p == "otcd") {
    Setup s = new_setup(o, rng);
    save(path_for(o, "key"), s, "key", otcd::keygen(s.lambda, s.n, rng));
  } else if (p == "ce-ske-qrom" || p == "ce-ske-css") {
    Setup s = new_setup(o, rng);
    save(path_for(o, "key"), s, "key", crypto::ske_keygen(s.lambda, rng));
  } else if (p == "ce-pke-qrom" || p == "ce-pke-css") {
    Setup s = new_setup(o, rng);
    auto kp = crypto::pke_keygen(rng);
    save(path_for(o, "pk"), s, "pk", kp.pk);
    save(path_for(o, "sk"), s, "sk", kp.sk);
  } else if (p == "rnce") {
    if (!o.msk.empty()) {
      Setup s;
      auto msk = load<rnce::MasterKey>(o.msk, p, "msk", s, ss.reg);
      rnce::Scheme sch(s.lambda, variant_of(s), s.H);
      save(path_for(o, "sk"), s, "sk", sch.keygen(msk, rng));
    } else {
      Setup s = new_setup(o, rng);
      rnce::Scheme sch(s.lambda, variant_of(s), s.H);
      auto [pk, msk] = sch.setup(s.n, rng);
      save(path_for(o, "pk"), s, "pk", pk);
      save(path_for(o, "msk"), s, "msk", msk);
      save(path_for(o, "sk"), s, "sk", sch.keygen(msk, rng));
    }
  } else if (p == "garble") {
    Setup s = new_setup(o, rng);
    garble::Scheme sch(s.lambda, s.H);
    save(path_for(o, "key"), s, "key", sch.setup(s.n, rng));
  } else if (p == "fe1" || p == "fead") {
    if (!o.msk.empty()) {
      Setup s;
      if (p == "fe1") {
        auto msk = load<fe::Fe1Master>(o.msk, p, "msk", s, ss.reg);
        fe::Fe1 sch(s.lambda, variant_of(s), s.H, mux_of(s));
        save(path_for(o, "sk"), s, "sk", sch.keygen(msk, parse_bits(o.func, "--func truth table")));
      } else {
        auto msk = load<fe::FeadMaster>(o.msk, p, "msk", s, ss.reg);
        fe::Fead sch(s.lambda, variant_of(s), s.H, mux_of(s));
        save(path_for(o, "sk"), s, "sk", sch.keygen(msk, parse_bits(o.func, "--func truth table"), rng));
      }
    } else {
      Setup s = new_setup(o, rng);
      if (p == "fe1") {
        fe::Fe1 sch(s.lambda, variant_of(s), s.H, mux_of(s));
        auto [mpk, msk] = sch.setup(rng);
        save(path_for(o, "mpk"), s, "mpk", mpk);
        save(path_for(o, "msk"), s, "msk", msk);
      } else {
        fe::Fead sch(s.lambda, variant_of(s), s.H, mux_of(s));
        auto [mpk, msk] = sch.setup(rng);
        save(path_for(o, "mpk"), s, "mpk", mpk);
        save(path_for(o, "msk"), s, "msk", msk);
      }
    }
  } else if (p == "feq") {
    if (!o.msk.empty()) {
      Setup s;
      auto msk = load<fe::FeqMaster>(o.msk, p, "msk", s, ss.reg);
      fe::Feq sch(s.feq, variant_of(s), s.H, static_cast<fe::FeqInner>(s.inner));
      auto C = parse_poly(o.func, s.feq.ell, sch.field());
      save(path_for(o, "sk"), s, "sk", sch.keygen(msk, C, rng));
    } else {
      Setup s = new_setup(o, rng);
      fe::Feq sch(s.feq, variant_of(s), s.H, static_cast<fe::FeqInner>(s.inner));
      auto [mpk, msk] = sch.setup(rng);
      save(path_for(o, "mpk"), s, "mpk", mpk);
      save(path_for(o, "msk"), s, "msk", msk);
    }
  }
  return kOk;
}

template <class Ct, class Vk>
void save_enc(const Opts& o, const Setup& s, const Vk& vk, const Ct& ct) {
  save(path_for(o, "vk"), s, "vk", vk);
  save(path_for(o, "ct"), s, "ct", ct);
}

int cmd_enc(const Opts& o, Session& ss) {
  Rng& rng = ss.rng;
  const std::string& p = o.prim;
  Setup s;
  if (p == "otcd") {
    auto key = load<otcd::Key>(o.key, p, "key", s, ss.reg);
    BitString m = parse_bits(o.msg, "--msg");
    if (m.size() != key.n) throw UsageError("--msg must have " + std::to_string(key.n) + " bits");
    save_enc(o, s, key, otcd::enc(key, m, ss.reg, rng));
  } else if (p == "ce-ske-qrom" || p == "ce-ske-css") {
    auto key = load<crypto::SkeKey>(o.key, p, "key", s, ss.reg);
    ce::Ske sch(s.lambda, variant_of(s), s.H);
    auto e = sch.enc(key, parse_bits(o.msg, "--msg"), ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  } else if (p == "ce-pke-qrom" || p == "ce-pke-css") {
    auto pk = load<crypto::PkePublicKey>(o.pk, p, "pk", s, ss.reg);
    ce::Pke sch(s.lambda, variant_of(s), s.H);
    auto e = sch.enc(pk, parse_bits(o.msg, "--msg"), ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  } else if (p == "rnce") {
    auto pk = load<rnce::PublicKey>(o.pk, p, "pk", s, ss.reg);
    rnce::Scheme sch(s.lambda, variant_of(s), s.H);
    auto e = sch.enc(pk, parse_bits(o.msg, "--msg"), ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  } else if (p == "garble") {
    auto labels = load<garble::Labels>(o.key, p, "key", s, ss.reg);
    garble::Scheme sch(s.lambda, s.H);
    auto c = read_circuit(o.circuit, s.n, rng);
    auto [gc, vk] = sch.garble(c, labels, ss.reg, rng);
    std::cout << "garbled " << c.gates.size() << " gates, " << c.outputs.size() << " outputs\n";
    save_enc(o, s, vk, gc);
  } else if (p == "fe1") {
    auto mpk = load<fe::Fe1Public>(o.mpk, p, "mpk", s, ss.reg);
    fe::Fe1 sch(s.lambda, variant_of(s), s.H, mux_of(s));
    auto e = sch.enc(mpk, parse_bits(o.msg, "--msg"), ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  } else if (p == "fead") {
    auto mpk = load<fe::FeadPublic>(o.mpk, p, "mpk", s, ss.reg);
    fe::Fead sch(s.lambda, variant_of(s), s.H, mux_of(s));
    auto e = sch.enc(mpk, parse_bits(o.msg, "--msg"), ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  } else if (p == "feq") {
    auto mpk = load<fe::FeqPublic>(o.mpk, p, "mpk", s, ss.reg);
    fe::Feq sch(s.feq, variant_of(s), s.H, static_cast<fe::FeqInner>(s.inner));
    auto x = parse_elements(o.msg);
    if (x.size() != s.feq.ell) throw UsageError("--msg needs " + std::to_string(s.feq.ell) + " field elements");
    for (uint64_t v : x)
      if (v >= s.feq.p) throw UsageError("--msg elements must be below p = " + std::to_string(s.feq.p));
    auto e = sch.enc(mpk, x, ss.reg, rng);
    save_enc(o, s, e.vk, e.ct);
  }
  return kOk;
}

int cmd_dec(const Opts& o, Session& ss) {
  const std::string& p = o.prim;
  Setup s;
  int rc = kOk;
  if (p == "otcd") {
    auto key = load<otcd::Key>(o.key, p, "key", s, ss.reg);
    auto ct = load<otcd::Ciphertext>(o.ct, p, "ct", s, ss.reg);
    if (ct.c.size() != key.n || ct.qubits.size() != key.theta.size()) throw FormatError("ciphertext size mismatch");
    rc = report_dec(otcd::dec(key, ct));
  } else if (p == "ce-ske-qrom" || p == "ce-ske-css") {
    auto key = load<crypto::SkeKey>(o.key, p, "key", s, ss.reg);
    auto ct = load<ce::Ciphertext>(o.ct, p, "ct", s, ss.reg);
    rc = report_dec(ce::Ske(s.lambda, variant_of(s), s.H).dec(key, ct));
  } else if (p == "ce-pke-qrom" || p == "ce-pke-css") {
    auto sk = load<crypto::PkeSecretKey>(o.sk, p, "sk", s, ss.reg);
    auto ct = load<ce::Ciphertext>(o.ct, p, "ct", s, ss.reg);
    rc = report_dec(ce::Pke(s.lambda, variant_of(s), s.H).dec(sk, ct));
  } else if (p == "rnce") {
    auto sk = load<rnce::SecretKey>(o.sk, p, "sk", s, ss.reg);
    auto ct = load<rnce::Ciphertext>(o.ct, p, "ct", s, ss.reg);
    rc = report_dec(rnce::Scheme(s.lambda, variant_of(s), s.H).dec(sk, ct));
  } else if (p == "garble") {
    auto labels = load<garble::Labels>(o.key, p, "key", s, ss.reg);
    auto gc = load<garble::GarbledCircuit>(o.ct, p, "ct", s, ss.reg);
    BitString x = parse_bits(o.input, "--input");
    if (x.size() != labels.size()) throw UsageError("--input must have " + std::to_string(labels.size()) + " bits");
    rc = report_dec(garble::Scheme(s.lambda, s.H).eval(gc, garble::select_labels(labels, x)));
  } else if (p == "fe1") {
    auto sk = load<fe::Fe1Key>(o.sk, p, "sk", s, ss.reg);
    auto ct = load<fe::Fe1Ciphertext>(o.ct, p, "ct", s, ss.reg);
    rc = report_dec(fe::Fe1(s.lambda, variant_of(s), s.H, mux_of(s)).dec(sk, ct));
  } else if (p == "fead") {
    auto sk = load<fe::FeadKey>(o.sk, p, "sk", s, ss.reg);
    auto ct = load<fe::FeadCiphertext>(o.ct, p, "ct", s, ss.reg);
    rc = report_dec(fe::Fead(s.lambda, variant_of(s), s.H, mux_of(s)).dec(sk, ct));
  } else if (p == "feq") {
    auto sk = load<fe::FeqKey>(o.sk, p, "sk", s, ss.reg);
    auto ct = load<fe::FeqCiphertext>(o.ct, p, "ct", s, ss.reg);
    auto y = fe::Feq(s.feq, variant_of(s), s.H, static_cast<fe::FeqInner>(s.inner)).dec(sk, ct);
    if (y) std::cout << *y << "\n";
    else std::cout << "bottom: decryption rejected\n";
    rc = y ? kOk : kBottom;
  }
  artifact::consume(o.ct);
  return rc;
}

int cmd_del(const Opts& o, Session& ss) {
  const std::string& p = o.prim;
  if (p == "otcd") return do_del<otcd::Ciphertext, otcd::Cert>(o, ss, [](auto& ct) { return otcd::del(ct); });
  if (p.rfind("ce-", 0) == 0) return do_del<ce::Ciphertext, ce::CertBundle>(o, ss, [](auto& ct) { return ce::del(ct); });
  if (p == "rnce") return do_del<rnce::Ciphertext, ce::CertBundle>(o, ss, [](auto& ct) { return rnce::del(ct); });
  if (p == "garble")
    return do_del<garble::GarbledCircuit, ce::CertBundle>(o, ss, [](auto& ct) { return garble::del(ct); });
  if (p == "fe1") return do_del<fe::Fe1Ciphertext, ce::CertBundle>(o, ss, [](auto& ct) { return fe::del(ct); });
  if (p == "fead") return do_del<fe::FeadCiphertext, fe::FeadCert>(o, ss, [](auto& ct) { return fe::del(ct); });
  return do_del<fe::FeqCiphertext, fe::FeqCert>(o, ss, [](auto& ct) { return fe::del(ct); });
}

int cmd_vrfy(const Opts& o, Session& ss) {
  const std::string& p = o.prim;
  if (p == "otcd")
    return do_vrfy<otcd::Key, otcd::Cert>(o, ss, [](const auto& k, auto& c) {
      return c.size() == k.theta.size() && otcd::vrfy(k, c);
    });
  if (p == "fead") return do_vrfy<fe::FeadVk, fe::FeadCert>(o, ss, [](const auto& v, auto& c) { return fe::vrfy(v, c); });
  if (p == "feq")
    return do_vrfy<std::vector<fe::InnerVk>, fe::FeqCert>(o, ss, [](const auto& v, auto& c) { return fe::vrfy(v, c); });
  return do_vrfy<ce::VkBundle, ce::CertBundle>(o, ss, [](const auto& v, auto& c) { return ce::verify(v, c); });
}

// ---- experiment / params ----

int cmd_experiment(const Opts& o) {
  using namespace harness;
  uint64_t seed = o.seed.value_or(1);
  std::vector<TableRow> rows;
  auto tags_or = [&](std::vector<std::string> all) {
    if (o.adversary == "all") return all;
    return std::vector<std::string>{o.adversary};
  };
  if (o.game == "otcd") {
    size_t trials = o.trials.value_or(10000);
    for (const auto& tag : tags_or(otcd_adversary_tags())) {
      auto st = run_otcd_game(otcd_adversary(tag), o.lambda, trials, seed);
      std::optional<double> acc_target = tag == "honest-deleter" ? 1.0 : otcd_guess_acceptance(o.lambda);
      std::optional<double> adv_target;
      if (tag == "honest-deleter") adv_target = 0.0;
      rows.push_back({"otcd", tag, o.lambda, 2 * trials, "acceptance", st.acceptance(), st.acceptance_sigma(),
                      acc_target});
      rows.push_back({"otcd", tag, o.lambda, 2 * trials, "advantage", st.advantage(), st.advantage_sigma(),
                      adv_target});
      rows.push_back({"otcd", tag, o.lambda, 2 * trials, "advantage | accepted", st.conditional_advantage(), 0,
                      std::nullopt});
    }
  } else if (auto prim = parse_primitive(o.game)) {
    size_t trials = o.trials.value_or(500);
    size_t k = o.n.value_or(1);
    for (const auto& tag : tags_or(ce_adversary_tags())) {
      auto adv = ce_adversary(tag);
      GameStats st = k > 1 ? run_ce_multi_game(*prim, adv, o.lambda, k, trials, seed)
                           : run_ce_indcpa_game(*prim, adv, o.lambda, trials, seed);
      std::string name = k > 1 ? o.game + " x" + std::to_string(k) : o.game;
      std::optional<double> zero = 0.0;
      rows.push_back({name, tag, o.lambda, 2 * trials, "acceptance", st.acceptance(), st.acceptance_sigma(),
                      std::nullopt});
      rows.push_back({name, tag, o.lambda, 2 * trials, "advantage", st.advantage(), st.advantage_sigma(),
                      tag == "dec-before-delete" ? std::nullopt : zero});
      rows.push_back({name, tag, o.lambda, 2 * trials, "advantage | accepted", st.conditional_advantage(), 0,
                      std::nullopt});
      if (tag == "dec-before-delete" && k == 1) {
        auto ungated = run_ce_indcpa_game(*prim, adv, o.lambda, trials, seed, Disclose::kAlways);
        rows.push_back({name, tag, o.lambda, 2 * trials, "advantage, key always", ungated.unconditional_advantage(),
                        0, 1.0});
      }
    }
  } else if (o.game == "lemma") {
    size_t trials = o.trials.value_or(20000);
    for (const auto& tag : tags_or(lemma_strategy_tags())) {
      auto s = lemma_strategy(tag);
      auto ex = ce_lemma_exact(*s, o.lambda);
      auto mc = ce_lemma_monte_carlo(*s, o.lambda, trials, seed);
      auto c = compare(ex, mc);
      rows.push_back({"lemma", tag, o.lambda, 0, "distance (exact)", ex.distance, 0, std::nullopt});
      rows.push_back({"lemma", tag, o.lambda, 2 * trials, "distance (sampled)", c.estimate, c.sigma, ex.distance});
    }
  } else {
    throw UsageError("unknown game '" + o.game + "' (otcd, ce-ske-qrom, ce-ske-css, ce-pke-qrom, ce-pke-css, lemma)");
  }
  std::cout << format_table(rows);
  return kOk;
}

int cmd_params(const Opts& o) {
  if (o.game != "feq") throw UsageError("only 'params feq' is available");
  fe::FeqParams p = feq_params(o);
  auto shape = fe::universal::linear_shape(field::Field(p.p), p.ell, p.D, p.S);
  auto u = fe::universal::linear(shape);
  auto c = u.build(BitString(u.msg_bits));
  fe::Fe1 inner(p.lambda, parse_variant(o.variant), crypto::HashOracle(), u);
  size_t q_inner = inner.ciphertext_qubits();
  std::cout << "feq parameters (lambda=" << p.lambda << ", q=" << p.q << ", D=" << p.D << ", ell=" << p.ell << ")\n";
  std::cout << "  constants ct=" << p.constants.ct << " cN=" << p.constants.cN << " cv=" << p.constants.cv
            << " cS=" << p.constants.cS << "\n";
  auto row = [](const std::string& k, auto v) { std::cout << "  " << std::left << std::setw(34) << k << v << "\n"; };
  row("t (share degree)", p.t);
  row("N (instances)", p.N);
  row("tD+1 (decryption set)", p.t * p.D + 1);
  row("v (|Delta|)", p.v);
  row("S (mask pool)", p.S);
  row("p (field, prime)", p.p);
  row("element width (bits)", shape.field.width());
  row("monomial basis size", shape.basis.size());
  row("description bits", shape.desc_bits());
  row("inner message bits", shape.msg_bits());
  row("universal circuit gates", c.gates.size());
  row("universal circuit depth", c.depth());
  row("qubits per non-adaptive inner ct", q_inner);
  row("rnce plaintext bits (adaptive)", 2 * q_inner);
  return kOk;
}

void add_common(CLI::App* sub, Opts& o) {
  sub->add_option("--lambda", o.lambda, "security parameter")->check(CLI::Range(1, 4096));
  sub->add_option("--seed", o.seed, "seed for all randomness (fresh if omitted)");
  sub->add_option("--out", o.out, "output path prefix");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"everlast: certified-deletion encryption toolkit"};
  app.require_subcommand(1);
  Opts o;
  auto prim_check = CLI::IsMember(kPrimitives);
  std::map<std::string, CLI::App*> ops;
  for (const char* name : {"keygen", "enc", "dec", "del", "vrfy"}) {
    auto* sub = app.add_subcommand(name, std::string(name) + " for a primitive");
    sub->add_option("primitive", o.prim, "primitive")->required()->check(prim_check);
    add_common(sub, o);
    ops[name] = sub;
  }
  auto* kg = ops["keygen"];
  kg->add_option("--n", o.n, "message bits (otcd, rnce), inputs (garble), index bits (fe1, fead)");
  kg->add_option("--variant", o.variant, "qrom or css (rnce, fe1, fead, feq)");
  kg->add_option("--params", o.params, "feq: q,D,ell,ct,cN,cv,cS");
  kg->add_option("--p", o.p, "feq: prime modulus override");
  kg->add_option("--inner", o.inner, "feq: adaptive or non-adaptive inner scheme");
  kg->add_option("--msk", o.msk, "master key: derive a user key instead of running setup");
  kg->add_option("--func", o.func, "fe1/fead truth table bits, feq polynomial such as '3*x0^2*x1 + 5'");
  auto* en = ops["enc"];
  en->add_option("--key", o.key, "secret key / labels file");
  en->add_option("--pk", o.pk, "public key file");
  en->add_option("--mpk", o.mpk, "master public key file");
  en->add_option("--msg", o.msg, "message bits, or comma-separated field elements for feq");
  en->add_option("--circuit", o.circuit, "garble: circuit file, or 'random'");
  auto* de = ops["dec"];
  de->add_option("--key", o.key, "secret key / labels file");
  de->add_option("--sk", o.sk, "secret key file");
  de->add_option("--ct", o.ct, "ciphertext file (consumed)")->required();
  de->add_option("--input", o.input, "garble: evaluation input bits");
  ops["del"]->add_option("--ct", o.ct, "ciphertext file (consumed)")->required();
  ops["vrfy"]->add_option("--vk", o.vk, "verification key file")->required();
  ops["vrfy"]->add_option("--cert", o.cert, "certificate file (consumed)")->required();

  auto* ex = app.add_subcommand("experiment", "run a security experiment and print a table");
  ex->add_option("game", o.game, "otcd | ce-ske-qrom | ce-ske-css | ce-pke-qrom | ce-pke-css | lemma")->required();
  ex->add_option("--adversary", o.adversary, "adversary tag, or 'all'");
  ex->add_option("--trials", o.trials, "trials per challenge bit");
  ex->add_option("--n", o.n, "independent instances for the ce games");
  add_common(ex, o);

  auto* pa = app.add_subcommand("params", "print a parameter table");
  pa->add_option("scheme", o.game, "feq")->required();
  pa->add_option("--params", o.params, "q,D,ell,ct,cN,cv,cS");
  pa->add_option("--p", o.p, "prime modulus override");
  pa->add_option("--variant", o.variant, "qrom or css");
  add_common(pa, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (ex->parsed()) return cmd_experiment(o);
    if (pa->parsed()) return cmd_params(o);
    uint64_t seed = o.seed ? *o.seed : std::random_device{}();
    Session ss(seed);
    if (ops["keygen"]->parsed()) return cmd_keygen(o, ss);
    if (ops["enc"]->parsed()) return cmd_enc(o, ss);
    if (ops["dec"]->parsed()) return cmd_dec(o, ss);
    if (ops["del"]->parsed()) return cmd_del(o, ss);
    if (ops["vrfy"]->parsed()) return cmd_vrfy(o, ss);
  } catch (const ConsumedError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const FormatError& e) {
    std::cerr << "bad artifact: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
