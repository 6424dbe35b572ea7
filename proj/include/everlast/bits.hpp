// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "everlast/rng.hpp"

namespace everlast {

// Packed bit vector. Bit i lives in word i/64 at position i%64; the byte
// encoding puts bit i in byte i/8 at position i%8. Bits past size() are
// always zero.
class BitString {
 public:
  BitString() = default;
  explicit BitString(size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static BitString from_string(std::string_view s);  // "0110", index 0 first
  static BitString from_bytes(const Bytes& b, size_t nbits);
  static BitString from_uint(uint64_t v, size_t nbits);  // bit i = (v >> i) & 1
  static BitString random(size_t n, Rng& rng);
  static BitString ones(size_t n);

  size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }
  bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  bool operator[](size_t i) const { return get(i); }
  void set(size_t i, bool b) {
    uint64_t m = uint64_t{1} << (i & 63);
    if (b) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(size_t i) { w_[i >> 6] ^= uint64_t{1} << (i & 63); }
  void push_back(bool b);
  void append(const BitString& o);

  BitString slice(size_t off, size_t len) const;
  void assign_slice(size_t off, const BitString& src);

  BitString& operator^=(const BitString& o);
  friend BitString operator^(BitString a, const BitString& b) { return a ^= b; }
  friend bool operator==(const BitString& a, const BitString& b) {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  BitString operator&(const BitString& o) const;

  size_t popcount() const;
  bool parity() const { return popcount() & 1; }
  bool is_zero() const;
  // Little-endian integer value of the first min(64, size) bits.
  uint64_t to_uint() const;

  Bytes to_bytes() const;
  std::string to_string() const;

  const uint64_t* words() const { return w_.data(); }
  uint64_t* words() { return w_.data(); }
  size_t word_count() const { return w_.size(); }

 private:
  void check_same_size(const BitString& o) const;
  size_t n_ = 0;
  std::vector<uint64_t> w_;
};

// ((a ^ b) & mask) == 0
bool masked_equal(const BitString& a, const BitString& b, const BitString& mask);
// Parity of the bits of a at positions where mask is 0.
bool parity_where_clear(const BitString& a, const BitString& mask);

Bytes xor_bytes(const Bytes& a, const Bytes& b);

}  // namespace everlast
