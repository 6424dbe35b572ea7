// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Simulator for the small family of states the protocols use: products of
// single-qubit states plus a few entangled islands of at most 4 qubits
// (Bell pairs, teleportation). Single-qubit states are interned so a
// BB84 qubit costs one 8-byte slot.

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "everlast/bits.hpp"
#include "everlast/errors.hpp"
#include "everlast/rng.hpp"

namespace everlast::qsim {

using Amp = std::complex<double>;

enum class Basis : uint8_t { kComputational, kHadamard };

inline constexpr size_t kMaxIsland = 4;

class QuantumRegister {
 public:
  explicit QuantumRegister(uint64_t seed) : rng_(seed) {}
  static std::shared_ptr<QuantumRegister> create(uint64_t seed) {
    return std::make_shared<QuantumRegister>(seed);
  }
  QuantumRegister(const QuantumRegister&) = delete;
  QuantumRegister& operator=(const QuantumRegister&) = delete;

  // Fresh single qubit in the given (normalized) state.
  uint32_t alloc(const std::array<Amp, 2>& state);
  // Fresh |z>_theta qubit without touching amplitudes.
  uint32_t alloc_bb84(bool z, bool theta);
  // Fresh island in the given state; qubit j of the result is bit j of the
  // amplitude index.
  std::vector<uint32_t> alloc_island(const std::vector<Amp>& amps);

  void x(uint32_t q);
  void z(uint32_t q);
  void h(uint32_t q);
  void cnot(uint32_t control, uint32_t target);

  // Born-rule sample; the qubit is consumed and any island it belonged to
  // collapses and shrinks.
  bool measure(uint32_t q, Basis basis);
  // Trace the qubit out. A product qubit is simply dropped; an entangled
  // one is measured and the outcome forgotten, which leaves identical
  // statistics for every other qubit.
  void discard(uint32_t q);

  bool live(uint32_t q) const { return q < slots_.size() && slots_[q].kind != kDead; }
  size_t live_count() const { return live_; }
  // Qubits sharing q's island, in island order (q itself for a product qubit).
  std::vector<uint32_t> island_of(uint32_t q) const;
  // Amplitudes of q's island, index bit j = island_of(q)[j].
  std::vector<Amp> island_amplitudes(uint32_t q) const;
  size_t entangled_island_count() const;
  // Largest |norm - 1| over all live islands.
  double max_norm_deviation() const;

  Rng& rng() { return rng_; }

 private:
  enum : uint8_t { kDead = 0, kSingle = 1, kMulti = 2 };
  struct Slot {
    uint32_t ref;
    uint8_t kind;
    uint8_t pos;
  };
  struct Island {
    uint8_t k = 0;
    std::array<uint32_t, kMaxIsland> q{};
    std::vector<Amp> a;
  };

  void check(uint32_t q) const;
  std::array<Amp, 2> single(uint32_t ref) const;
  uint32_t intern(const std::array<Amp, 2>& s);
  void set_single(uint32_t q, const std::array<Amp, 2>& s) { slots_[q] = {intern(s), kSingle, 0}; }
  uint32_t new_island();
  // Moves q into a multi island (creating a 1-qubit island if needed).
  uint32_t promote(uint32_t q);
  uint32_t merge(uint32_t ia, uint32_t ib);
  bool sample(double p1);

  std::vector<Slot> slots_;
  std::vector<std::array<Amp, 2>> custom_;
  std::vector<Island> islands_;
  std::vector<uint32_t> free_islands_;
  size_t live_ = 0;
  Rng rng_;
};

using RegisterPtr = std::shared_ptr<QuantumRegister>;

// Move-only reference to an ordered list of qubits. Copying is deleted to
// model no-cloning; operations that measure everything consume the handle.
class QubitHandle {
 public:
  QubitHandle() = default;
  QubitHandle(RegisterPtr reg, uint32_t first, uint32_t count)
      : reg_(std::move(reg)), first_(first), count_(count) {}
  QubitHandle(RegisterPtr reg, std::vector<uint32_t> ids)
      : reg_(std::move(reg)), count_(static_cast<uint32_t>(ids.size())), ids_(std::move(ids)),
        explicit_(true) {}
  QubitHandle(const QubitHandle&) = delete;
  QubitHandle& operator=(const QubitHandle&) = delete;
  QubitHandle(QubitHandle&& o) noexcept { *this = std::move(o); }
  QubitHandle& operator=(QubitHandle&& o) noexcept;

  size_t size() const { return count_; }
  uint32_t id(size_t i) const { return explicit_ ? ids_[i] : first_ + static_cast<uint32_t>(i); }
  std::vector<uint32_t> ids() const;
  void set_ids(std::vector<uint32_t> ids);

  bool valid() const { return reg_ != nullptr && !consumed_; }
  bool consumed() const { return consumed_; }
  void mark_consumed() { consumed_ = true; }
  // Throws ConsumedError unless the handle is live.
  QuantumRegister& reg() const;
  const RegisterPtr& reg_ptr() const { return reg_; }

 private:
  RegisterPtr reg_;
  uint32_t first_ = 0;
  uint32_t count_ = 0;
  std::vector<uint32_t> ids_;
  bool explicit_ = false;
  bool consumed_ = false;
};

QubitHandle alloc_bb84(const RegisterPtr& reg, const BitString& z, const BitString& theta);
std::pair<QubitHandle, QubitHandle> alloc_bell_pairs(const RegisterPtr& reg, size_t n);
// Fresh qubits in the given single-qubit states.
QubitHandle alloc_states(const RegisterPtr& reg, const std::vector<std::array<Amp, 2>>& states);

// Applies Z^{b_i} X^{a_i} (X first) to qubit i.
void apply_pauli(QubitHandle& h, const BitString& a, const BitString& b);
// Applies X^{a_i} Z^{b_i} (Z first): the exact inverse of apply_pauli.
void apply_pauli_inverse(QubitHandle& h, const BitString& a, const BitString& b);
void apply_x(QubitHandle& h, size_t i);
void apply_z(QubitHandle& h, size_t i);
void apply_hadamard(QubitHandle& h, const std::vector<size_t>& idxs);
void apply_cnot(QubitHandle& hc, size_t ic, QubitHandle& ht, size_t it);

// U_Q: the qubits at the positions in Q (taken in ascending order) move to
// the front, the remaining positions follow in ascending order. Only the
// handle's index map changes.
void apply_permutation(QubitHandle& h, const std::vector<uint32_t>& Q);
// U_Q^dagger.
void apply_permutation_inverse(QubitHandle& h, const std::vector<uint32_t>& Q);

// Measures the listed positions; those qubits are consumed, the handle
// stays usable for the rest.
BitString measure(QubitHandle& h, const std::vector<size_t>& idxs, Basis basis);
// Measures every qubit and consumes the handle.
BitString measure_all(QubitHandle& h, Basis basis);
// Traces out every remaining live qubit and consumes the handle.
void discard(QubitHandle& h);

// Bell-basis measurement of pairs (hA_j, hB_j): CNOT hA_j -> hB_j,
// H on hA_j, then z_j = outcome of hA_j and x_j = outcome of hB_j. If hB_j
// was half of a Bell pair, the partner holds X^x Z^z rho Z^z X^x.
// Consumes both handles.
std::pair<BitString, BitString> bell_measure(QubitHandle& hA, QubitHandle& hB);

// Serialized state of the handle's qubits:
//   u8 version | u32 island count |
//   per island: u8 k, k x u32 handle positions, 2^k x (f64 re, f64 im)
// All integers and doubles little-endian. Every island must lie inside
// the handle and every qubit must be live.
Bytes snapshot(const QubitHandle& h);
QubitHandle restore(const RegisterPtr& reg, const Bytes& bytes);

// Dense state of a handle whose islands all lie inside it (at most 16
// qubits); index bit i = handle position i.
std::vector<Amp> state_vector(const QubitHandle& h);

}  // namespace everlast::qsim
