// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/qsim.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

namespace everlast::qsim {
namespace {

constexpr double kS = 0.70710678118654752440;

// Interned states: |0>, |1>, |+>, |->, and their negatives.
const std::array<std::array<Amp, 2>, 8> kStandard = {{
    {Amp(1, 0), Amp(0, 0)},
    {Amp(0, 0), Amp(1, 0)},
    {Amp(kS, 0), Amp(kS, 0)},
    {Amp(kS, 0), Amp(-kS, 0)},
    {Amp(-1, 0), Amp(0, 0)},
    {Amp(0, 0), Amp(-1, 0)},
    {Amp(-kS, 0), Amp(-kS, 0)},
    {Amp(-kS, 0), Amp(kS, 0)},
}};
constexpr uint8_t kXTable[8] = {1, 0, 2, 7, 5, 4, 6, 3};
constexpr uint8_t kZTable[8] = {0, 5, 3, 2, 4, 1, 7, 6};
constexpr uint8_t kHTable[8] = {2, 3, 0, 1, 6, 7, 4, 5};
// Measurement behaviour of the standard states: 0 / 1 deterministic, 2 coin.
constexpr uint8_t kCompOutcome[8] = {0, 1, 2, 2, 0, 1, 2, 2};
constexpr uint8_t kHadOutcome[8] = {2, 2, 0, 1, 2, 2, 0, 1};

bool close(const std::array<Amp, 2>& a, const std::array<Amp, 2>& b) {
  return std::abs(a[0] - b[0]) < 1e-12 && std::abs(a[1] - b[1]) < 1e-12;
}

void put_u32(Bytes& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

void put_f64(Bytes& out, double d) {
  static_assert(std::endian::native == std::endian::little);
  uint8_t raw[8];
  std::memcpy(raw, &d, 8);
  out.insert(out.end(), raw, raw + 8);
}

}  // namespace

void QuantumRegister::check(uint32_t q) const {
  if (q >= slots_.size()) throw std::out_of_range("unknown qubit id");
  if (slots_[q].kind == kDead) throw ConsumedError("qubit was already measured or deleted");
}

std::array<Amp, 2> QuantumRegister::single(uint32_t ref) const {
  return ref < 8 ? kStandard[ref] : custom_[ref - 8];
}

uint32_t QuantumRegister::intern(const std::array<Amp, 2>& s) {
  for (uint32_t i = 0; i < 8; ++i)
    if (close(s, kStandard[i])) return i;
  custom_.push_back(s);
  return static_cast<uint32_t>(custom_.size() + 7);
}

uint32_t QuantumRegister::alloc(const std::array<Amp, 2>& state) {
  double n = std::norm(state[0]) + std::norm(state[1]);
  if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("single-qubit state is not normalized");
  slots_.push_back({intern(state), kSingle, 0});
  ++live_;
  return static_cast<uint32_t>(slots_.size() - 1);
}

uint32_t QuantumRegister::alloc_bb84(bool z, bool theta) {
  slots_.push_back({static_cast<uint32_t>((theta ? 2 : 0) + (z ? 1 : 0)), kSingle, 0});
  ++live_;
  return static_cast<uint32_t>(slots_.size() - 1);
}

uint32_t QuantumRegister::new_island() {
  if (!free_islands_.empty()) {
    uint32_t i = free_islands_.back();
    free_islands_.pop_back();
    return i;
  }
  islands_.emplace_back();
  return static_cast<uint32_t>(islands_.size() - 1);
}

std::vector<uint32_t> QuantumRegister::alloc_island(const std::vector<Amp>& amps) {
  size_t dim = amps.size();
  if (dim < 2 || (dim & (dim - 1)) != 0 || dim > (size_t{1} << kMaxIsland))
    throw std::invalid_argument("island dimension must be 2^k with 1 <= k <= 4");
  double n = 0;
  for (const Amp& a : amps) n += std::norm(a);
  if (std::abs(n - 1.0) > 1e-9) throw std::invalid_argument("island state is not normalized");
  size_t k = std::countr_zero(dim);
  std::vector<uint32_t> ids;
  if (k == 1) {
    ids.push_back(alloc({amps[0], amps[1]}));
    return ids;
  }
  uint32_t ii = new_island();
  Island& isl = islands_[ii];
  isl.k = static_cast<uint8_t>(k);
  isl.a = amps;
  for (size_t j = 0; j < k; ++j) {
    slots_.push_back({ii, kMulti, static_cast<uint8_t>(j)});
    isl.q[j] = static_cast<uint32_t>(slots_.size() - 1);
    ids.push_back(isl.q[j]);
    ++live_;
  }
  return ids;
}

void QuantumRegister::x(uint32_t q) {
  check(q);
  Slot& s = slots_[q];
  if (s.kind == kSingle) {
    if (s.ref < 8) s.ref = kXTable[s.ref];
    else {
      auto st = single(s.ref);
      set_single(q, {st[1], st[0]});
    }
    return;
  }
  Island& isl = islands_[s.ref];
  size_t bit = size_t{1} << s.pos;
  for (size_t i = 0; i < isl.a.size(); ++i)
    if (!(i & bit)) std::swap(isl.a[i], isl.a[i | bit]);
}

void QuantumRegister::z(uint32_t q) {
  check(q);
  Slot& s = slots_[q];
  if (s.kind == kSingle) {
    if (s.ref < 8) s.ref = kZTable[s.ref];
    else {
      auto st = single(s.ref);
      set_single(q, {st[0], -st[1]});
    }
    return;
  }
  Island& isl = islands_[s.ref];
  size_t bit = size_t{1} << s.pos;
  for (size_t i = 0; i < isl.a.size(); ++i)
    if (i & bit) isl.a[i] = -isl.a[i];
}

void QuantumRegister::h(uint32_t q) {
  check(q);
  Slot& s = slots_[q];
  if (s.kind == kSingle) {
    if (s.ref < 8) s.ref = kHTable[s.ref];
    else {
      auto st = single(s.ref);
      set_single(q, {(st[0] + st[1]) * kS, (st[0] - st[1]) * kS});
    }
    return;
  }
  Island& isl = islands_[s.ref];
  size_t bit = size_t{1} << s.pos;
  for (size_t i = 0; i < isl.a.size(); ++i) {
    if (i & bit) continue;
    Amp a0 = isl.a[i], a1 = isl.a[i | bit];
    isl.a[i] = (a0 + a1) * kS;
    isl.a[i | bit] = (a0 - a1) * kS;
  }
}

uint32_t QuantumRegister::promote(uint32_t q) {
  Slot& s = slots_[q];
  if (s.kind == kMulti) return s.ref;
  auto st = single(s.ref);
  uint32_t ii = new_island();
  Island& isl = islands_[ii];
  isl.k = 1;
  isl.q[0] = q;
  isl.a = {st[0], st[1]};
  s = {ii, kMulti, 0};
  return ii;
}

uint32_t QuantumRegister::merge(uint32_t ia, uint32_t ib) {
  if (ia == ib) return ia;
  Island& A = islands_[ia];
  Island& B = islands_[ib];
  if (A.k + B.k > kMaxIsland)
    throw std::length_error("gate would entangle more than 4 qubits in one island");
  std::vector<Amp> amps(size_t{1} << (A.k + B.k));
  for (size_t i = 0; i < A.a.size(); ++i)
    for (size_t j = 0; j < B.a.size(); ++j) amps[i | (j << A.k)] = A.a[i] * B.a[j];
  for (size_t j = 0; j < B.k; ++j) {
    A.q[A.k + j] = B.q[j];
    slots_[B.q[j]] = {ia, kMulti, static_cast<uint8_t>(A.k + j)};
  }
  A.k = static_cast<uint8_t>(A.k + B.k);
  A.a = std::move(amps);
  B = Island{};
  free_islands_.push_back(ib);
  return ia;
}

void QuantumRegister::cnot(uint32_t control, uint32_t target) {
  check(control);
  check(target);
  if (control == target) throw std::invalid_argument("cnot control equals target");
  uint32_t ii = merge(promote(control), promote(target));
  Island& isl = islands_[ii];
  size_t bc = size_t{1} << slots_[control].pos;
  size_t bt = size_t{1} << slots_[target].pos;
  for (size_t i = 0; i < isl.a.size(); ++i)
    if ((i & bc) && !(i & bt)) std::swap(isl.a[i], isl.a[i | bt]);
}

bool QuantumRegister::sample(double p1) {
  if (p1 <= 0.0) return false;
  if (p1 >= 1.0) return true;
  if (p1 == 0.5) return rng_.bit();
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng_.engine()) < p1;
}

bool QuantumRegister::measure(uint32_t q, Basis basis) {
  check(q);
  Slot& s = slots_[q];
  if (s.kind == kSingle) {
    bool out;
    if (s.ref < 8) {
      uint8_t o = basis == Basis::kComputational ? kCompOutcome[s.ref] : kHadOutcome[s.ref];
      out = o == 2 ? rng_.bit() : o == 1;
    } else {
      auto st = single(s.ref);
      double p1 = basis == Basis::kComputational ? std::norm(st[1])
                                                 : std::norm((st[0] - st[1]) * kS);
      out = sample(p1);
    }
    s.kind = kDead;
    --live_;
    return out;
  }
  if (basis == Basis::kHadamard) h(q);
  uint32_t ii = s.ref;
  Island& isl = islands_[ii];
  size_t j = s.pos;
  size_t bit = size_t{1} << j;
  double p1 = 0;
  for (size_t i = 0; i < isl.a.size(); ++i)
    if (i & bit) p1 += std::norm(isl.a[i]);
  bool out = sample(p1);
  double norm = std::sqrt(out ? p1 : 1.0 - p1);
  std::vector<Amp> rest(isl.a.size() / 2);
  for (size_t i = 0; i < isl.a.size(); ++i) {
    if (static_cast<bool>(i & bit) != out) continue;
    size_t low = i & (bit - 1);
    size_t high = (i >> (j + 1)) << j;
    rest[low | high] = isl.a[i] / norm;
  }
  s.kind = kDead;
  --live_;
  for (size_t t = j + 1; t < isl.k; ++t) {
    isl.q[t - 1] = isl.q[t];
    slots_[isl.q[t - 1]].pos = static_cast<uint8_t>(t - 1);
  }
  --isl.k;
  if (isl.k == 1) {
    uint32_t other = isl.q[0];
    set_single(other, {rest[0], rest[1]});
    isl = Island{};
    free_islands_.push_back(ii);
  } else {
    isl.a = std::move(rest);
  }
  return out;
}

void QuantumRegister::discard(uint32_t q) {
  check(q);
  if (slots_[q].kind == kSingle) {
    slots_[q].kind = kDead;
    --live_;
    return;
  }
  measure(q, Basis::kComputational);
}

std::vector<uint32_t> QuantumRegister::island_of(uint32_t q) const {
  check(q);
  const Slot& s = slots_[q];
  if (s.kind == kSingle) return {q};
  const Island& isl = islands_[s.ref];
  return std::vector<uint32_t>(isl.q.begin(), isl.q.begin() + isl.k);
}

std::vector<Amp> QuantumRegister::island_amplitudes(uint32_t q) const {
  check(q);
  const Slot& s = slots_[q];
  if (s.kind == kSingle) {
    auto st = single(s.ref);
    return {st[0], st[1]};
  }
  return islands_[s.ref].a;
}

size_t QuantumRegister::entangled_island_count() const {
  return islands_.size() - free_islands_.size();
}

double QuantumRegister::max_norm_deviation() const {
  double worst = 0;
  for (const Slot& s : slots_) {
    if (s.kind != kSingle) continue;
    auto st = single(s.ref);
    worst = std::max(worst, std::abs(std::norm(st[0]) + std::norm(st[1]) - 1.0));
  }
  for (const Island& isl : islands_) {
    if (isl.k == 0) continue;
    double n = 0;
    for (const Amp& a : isl.a) n += std::norm(a);
    worst = std::max(worst, std::abs(n - 1.0));
  }
  return worst;
}

QubitHandle& QubitHandle::operator=(QubitHandle&& o) noexcept {
  reg_ = std::move(o.reg_);
  first_ = o.first_;
  count_ = o.count_;
  ids_ = std::move(o.ids_);
  explicit_ = o.explicit_;
  consumed_ = o.consumed_;
  o.reg_.reset();
  o.count_ = 0;
  o.ids_.clear();
  o.consumed_ = true;
  return *this;
}

std::vector<uint32_t> QubitHandle::ids() const {
  if (explicit_) return ids_;
  std::vector<uint32_t> r(count_);
  for (uint32_t i = 0; i < count_; ++i) r[i] = first_ + i;
  return r;
}

void QubitHandle::set_ids(std::vector<uint32_t> ids) {
  if (ids.size() != count_) throw std::invalid_argument("handle size mismatch");
  ids_ = std::move(ids);
  explicit_ = true;
}

QuantumRegister& QubitHandle::reg() const {
  if (consumed_ || reg_ == nullptr) throw ConsumedError("quantum handle was already consumed");
  return *reg_;
}

QubitHandle alloc_bb84(const RegisterPtr& reg, const BitString& z, const BitString& theta) {
  if (z.size() != theta.size()) throw std::invalid_argument("alloc_bb84: |z| != |theta|");
  if (z.empty()) return QubitHandle(reg, 0, 0);
  uint32_t first = reg->alloc_bb84(z[0], theta[0]);
  for (size_t i = 1; i < z.size(); ++i) reg->alloc_bb84(z[i], theta[i]);
  return QubitHandle(reg, first, static_cast<uint32_t>(z.size()));
}

std::pair<QubitHandle, QubitHandle> alloc_bell_pairs(const RegisterPtr& reg, size_t n) {
  if (n == 0) throw std::invalid_argument("alloc_bell_pairs needs at least one pair");
  std::vector<uint32_t> a, b;
  const std::vector<Amp> phi = {Amp(kS, 0), Amp(0, 0), Amp(0, 0), Amp(kS, 0)};
  for (size_t i = 0; i < n; ++i) {
    auto ids = reg->alloc_island(phi);
    a.push_back(ids[0]);
    b.push_back(ids[1]);
  }
  return {QubitHandle(reg, std::move(a)), QubitHandle(reg, std::move(b))};
}

QubitHandle alloc_states(const RegisterPtr& reg, const std::vector<std::array<Amp, 2>>& states) {
  std::vector<uint32_t> ids;
  ids.reserve(states.size());
  for (const auto& s : states) ids.push_back(reg->alloc(s));
  return QubitHandle(reg, std::move(ids));
}

namespace {

void check_len(const QubitHandle& h, const BitString& v) {
  if (v.size() != h.size()) throw std::invalid_argument("mask length does not match handle size");
}

void check_index(const QubitHandle& h, size_t i) {
  if (i >= h.size()) throw std::out_of_range("qubit index outside handle");
}

}  // namespace

void apply_pauli(QubitHandle& h, const BitString& a, const BitString& b) {
  check_len(h, a);
  check_len(h, b);
  QuantumRegister& r = h.reg();
  for (size_t i = 0; i < h.size(); ++i) {
    if (a[i]) r.x(h.id(i));
    if (b[i]) r.z(h.id(i));
  }
}

void apply_pauli_inverse(QubitHandle& h, const BitString& a, const BitString& b) {
  check_len(h, a);
  check_len(h, b);
  QuantumRegister& r = h.reg();
  for (size_t i = 0; i < h.size(); ++i) {
    if (b[i]) r.z(h.id(i));
    if (a[i]) r.x(h.id(i));
  }
}

void apply_x(QubitHandle& h, size_t i) {
  check_index(h, i);
  h.reg().x(h.id(i));
}

void apply_z(QubitHandle& h, size_t i) {
  check_index(h, i);
  h.reg().z(h.id(i));
}

void apply_hadamard(QubitHandle& h, const std::vector<size_t>& idxs) {
  QuantumRegister& r = h.reg();
  for (size_t i : idxs) check_index(h, i);
  for (size_t i : idxs) r.h(h.id(i));
}

void apply_cnot(QubitHandle& hc, size_t ic, QubitHandle& ht, size_t it) {
  check_index(hc, ic);
  check_index(ht, it);
  QuantumRegister& r = hc.reg();
  if (&r != &ht.reg()) throw std::invalid_argument("cnot across registers");
  r.cnot(hc.id(ic), ht.id(it));
}

namespace {

std::vector<uint32_t> permutation_order(size_t n, const std::vector<uint32_t>& Q) {
  std::vector<uint32_t> sorted = Q;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("permutation subset has duplicates");
  if (!sorted.empty() && sorted.back() >= n) throw std::out_of_range("permutation index outside handle");
  std::vector<uint32_t> order = sorted;
  std::vector<bool> in(n, false);
  for (uint32_t q : sorted) in[q] = true;
  for (uint32_t i = 0; i < n; ++i)
    if (!in[i]) order.push_back(i);
  return order;
}

}  // namespace

void apply_permutation(QubitHandle& h, const std::vector<uint32_t>& Q) {
  h.reg();
  auto order = permutation_order(h.size(), Q);
  std::vector<uint32_t> ids(h.size());
  for (size_t j = 0; j < order.size(); ++j) ids[j] = h.id(order[j]);
  h.set_ids(std::move(ids));
}

void apply_permutation_inverse(QubitHandle& h, const std::vector<uint32_t>& Q) {
  h.reg();
  auto order = permutation_order(h.size(), Q);
  std::vector<uint32_t> ids(h.size());
  for (size_t j = 0; j < order.size(); ++j) ids[order[j]] = h.id(j);
  h.set_ids(std::move(ids));
}

BitString measure(QubitHandle& h, const std::vector<size_t>& idxs, Basis basis) {
  QuantumRegister& r = h.reg();
  for (size_t i : idxs) check_index(h, i);
  BitString out(idxs.size());
  for (size_t k = 0; k < idxs.size(); ++k) out.set(k, r.measure(h.id(idxs[k]), basis));
  return out;
}

BitString measure_all(QubitHandle& h, Basis basis) {
  QuantumRegister& r = h.reg();
  BitString out(h.size());
  for (size_t i = 0; i < h.size(); ++i) out.set(i, r.measure(h.id(i), basis));
  h.mark_consumed();
  return out;
}

void discard(QubitHandle& h) {
  QuantumRegister& r = h.reg();
  for (size_t i = 0; i < h.size(); ++i)
    if (r.live(h.id(i))) r.discard(h.id(i));
  h.mark_consumed();
}

std::pair<BitString, BitString> bell_measure(QubitHandle& hA, QubitHandle& hB) {
  if (hA.size() != hB.size()) throw std::invalid_argument("bell_measure: handle sizes differ");
  QuantumRegister& r = hA.reg();
  if (&r != &hB.reg()) throw std::invalid_argument("bell_measure across registers");
  size_t n = hA.size();
  BitString x(n), z(n);
  for (size_t j = 0; j < n; ++j) {
    r.cnot(hA.id(j), hB.id(j));
    r.h(hA.id(j));
    z.set(j, r.measure(hA.id(j), Basis::kComputational));
    x.set(j, r.measure(hB.id(j), Basis::kComputational));
  }
  hA.mark_consumed();
  hB.mark_consumed();
  return {x, z};
}

Bytes snapshot(const QubitHandle& h) {
  QuantumRegister& r = h.reg();
  std::unordered_map<uint32_t, uint32_t> pos;
  pos.reserve(h.size());
  for (size_t i = 0; i < h.size(); ++i) {
    uint32_t id = h.id(i);
    if (!r.live(id)) throw ConsumedError("snapshot of a partially consumed handle");
    pos.emplace(id, static_cast<uint32_t>(i));
  }
  Bytes body;
  uint32_t count = 0;
  std::vector<bool> done(h.size(), false);
  for (size_t i = 0; i < h.size(); ++i) {
    if (done[i]) continue;
    auto members = r.island_of(h.id(i));
    auto amps = r.island_amplitudes(h.id(i));
    body.push_back(static_cast<uint8_t>(members.size()));
    for (uint32_t m : members) {
      auto it = pos.find(m);
      if (it == pos.end()) throw FormatError("snapshot: island extends outside the handle");
      done[it->second] = true;
      put_u32(body, it->second);
    }
    for (const Amp& a : amps) {
      put_f64(body, a.real());
      put_f64(body, a.imag());
    }
    ++count;
  }
  Bytes out;
  out.reserve(body.size() + 5);
  out.push_back(1);
  put_u32(out, count);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

QubitHandle restore(const RegisterPtr& reg, const Bytes& bytes) {
  size_t off = 0;
  auto need = [&](size_t n) {
    if (off + n > bytes.size()) throw FormatError("snapshot truncated");
  };
  auto u32 = [&]() {
    need(4);
    uint32_t v = 0;
    for (int i = 0; i < 4; ++i) v |= uint32_t{bytes[off + i]} << (8 * i);
    off += 4;
    return v;
  };
  auto f64 = [&]() {
    need(8);
    double d;
    std::memcpy(&d, bytes.data() + off, 8);
    off += 8;
    return d;
  };
  need(1);
  if (bytes[off++] != 1) throw FormatError("snapshot: unsupported version");
  uint32_t count = u32();
  std::vector<std::pair<uint32_t, uint32_t>> placed;  // (handle position, qubit id)
  for (uint32_t c = 0; c < count; ++c) {
    need(1);
    uint8_t k = bytes[off++];
    if (k == 0 || k > kMaxIsland) throw FormatError("snapshot: bad island size");
    std::vector<uint32_t> positions(k);
    for (auto& p : positions) p = u32();
    std::vector<Amp> amps(size_t{1} << k);
    for (auto& a : amps) {
      double re = f64();
      double im = f64();
      a = Amp(re, im);
    }
    std::vector<uint32_t> ids;
    try {
      ids = k == 1 ? std::vector<uint32_t>{reg->alloc({amps[0], amps[1]})} : reg->alloc_island(amps);
    } catch (const std::invalid_argument& e) {
      throw FormatError(std::string("snapshot: ") + e.what());
    }
    for (size_t j = 0; j < k; ++j) placed.emplace_back(positions[j], ids[j]);
  }
  if (off != bytes.size()) throw FormatError("snapshot: trailing bytes");
  std::vector<uint32_t> ids(placed.size(), UINT32_MAX);
  for (auto [p, id] : placed) {
    if (p >= ids.size() || ids[p] != UINT32_MAX) throw FormatError("snapshot: bad qubit positions");
    ids[p] = id;
  }
  return QubitHandle(reg, std::move(ids));
}

std::vector<Amp> state_vector(const QubitHandle& h) {
  QuantumRegister& r = h.reg();
  if (h.size() > 16) throw std::length_error("state_vector limited to 16 qubits");
  std::unordered_map<uint32_t, size_t> pos;
  for (size_t i = 0; i < h.size(); ++i) pos.emplace(h.id(i), i);
  std::vector<Amp> psi(size_t{1} << h.size(), Amp(0, 0));
  psi[0] = 1;
  std::vector<bool> done(h.size(), false);
  for (size_t i = 0; i < h.size(); ++i) {
    if (done[i]) continue;
    auto members = r.island_of(h.id(i));
    auto amps = r.island_amplitudes(h.id(i));
    std::vector<size_t> mpos;
    for (uint32_t m : members) {
      auto it = pos.find(m);
      if (it == pos.end()) throw FormatError("state_vector: island extends outside the handle");
      mpos.push_back(it->second);
      done[it->second] = true;
    }
    std::vector<Amp> next(psi.size(), Amp(0, 0));
    for (size_t idx = 0; idx < psi.size(); ++idx) {
      if (psi[idx] == Amp(0, 0)) continue;
      bool clear = true;
      for (size_t p : mpos) clear = clear && !((idx >> p) & 1);
      if (!clear) continue;
      for (size_t local = 0; local < amps.size(); ++local) {
        size_t full = idx;
        for (size_t j = 0; j < mpos.size(); ++j)
          if ((local >> j) & 1) full |= size_t{1} << mpos[j];
        next[full] += psi[idx] * amps[local];
      }
    }
    psi = std::move(next);
  }
  return psi;
}

}  // namespace everlast::qsim
