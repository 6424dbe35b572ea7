// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace everlast {

using Bytes = std::vector<uint8_t>;

// Seeded, reproducible randomness. All protocol randomness flows through
// one of these so a run is a pure function of its seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t next() { return eng_(); }

  bool bit() {
    if (nbits_ == 0) {
      buf_ = eng_();
      nbits_ = 64;
    }
    bool b = buf_ & 1;
    buf_ >>= 1;
    --nbits_;
    return b;
  }

  // Uniform in [0, n). n must be nonzero.
  uint64_t below(uint64_t n) { return std::uniform_int_distribution<uint64_t>(0, n - 1)(eng_); }

  Bytes bytes(size_t n) {
    Bytes out(n);
    size_t i = 0;
    while (i < n) {
      uint64_t w = eng_();
      for (int k = 0; k < 8 && i < n; ++k, ++i) out[i] = static_cast<uint8_t>(w >> (8 * k));
    }
    return out;
  }

  // Independent child stream, e.g. for a quantum register's measurements.
  Rng fork() { return Rng(eng_()); }

  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  uint64_t buf_ = 0;
  int nbits_ = 0;
};

}  // namespace everlast
