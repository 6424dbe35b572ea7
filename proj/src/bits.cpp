// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/bits.hpp"

#include <stdexcept>

#include "everlast/simd.hpp"

namespace everlast {

BitString BitString::from_string(std::string_view s) {
  BitString b(s.size());
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '1') b.set(i, true);
    else if (s[i] != '0') throw std::invalid_argument("bitstring may only contain 0 and 1");
  }
  return b;
}

BitString BitString::from_bytes(const Bytes& bytes, size_t nbits) {
  if (bytes.size() * 8 < nbits) throw std::invalid_argument("not enough bytes for bitstring");
  BitString b(nbits);
  for (size_t i = 0; i < nbits; ++i) b.set(i, (bytes[i >> 3] >> (i & 7)) & 1);
  return b;
}

BitString BitString::from_uint(uint64_t v, size_t nbits) {
  BitString b(nbits);
  for (size_t i = 0; i < nbits && i < 64; ++i) b.set(i, (v >> i) & 1);
  return b;
}

BitString BitString::random(size_t n, Rng& rng) {
  BitString b(n);
  for (auto& w : b.w_) w = rng.next();
  if (n & 63) b.w_.back() &= (uint64_t{1} << (n & 63)) - 1;
  return b;
}

BitString BitString::ones(size_t n) {
  BitString b(n);
  for (auto& w : b.w_) w = ~uint64_t{0};
  if (n & 63) b.w_.back() &= (uint64_t{1} << (n & 63)) - 1;
  return b;
}

void BitString::push_back(bool b) {
  if ((n_ & 63) == 0) w_.push_back(0);
  ++n_;
  set(n_ - 1, b);
}

void BitString::append(const BitString& o) {
  size_t off = n_;
  n_ += o.n_;
  w_.resize((n_ + 63) / 64, 0);
  assign_slice(off, o);
}

BitString BitString::slice(size_t off, size_t len) const {
  if (off + len > n_) throw std::out_of_range("bitstring slice out of range");
  BitString r(len);
  if ((off & 63) == 0) {
    for (size_t i = 0; i < r.w_.size(); ++i) r.w_[i] = w_[(off >> 6) + i];
    if (len & 63) r.w_.back() &= (uint64_t{1} << (len & 63)) - 1;
    return r;
  }
  for (size_t i = 0; i < len; ++i) r.set(i, get(off + i));
  return r;
}

void BitString::assign_slice(size_t off, const BitString& src) {
  if (off + src.n_ > n_) throw std::out_of_range("bitstring assign out of range");
  for (size_t i = 0; i < src.n_; ++i) set(off + i, src.get(i));
}

void BitString::check_same_size(const BitString& o) const {
  if (n_ != o.n_) throw std::invalid_argument("bitstring length mismatch");
}

BitString& BitString::operator^=(const BitString& o) {
  check_same_size(o);
  simd::active().xor_words(w_.data(), w_.data(), o.w_.data(), w_.size());
  return *this;
}

BitString BitString::operator&(const BitString& o) const {
  check_same_size(o);
  BitString r(n_);
  for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
  return r;
}

size_t BitString::popcount() const { return simd::active().popcount(w_.data(), w_.size()); }

bool BitString::is_zero() const {
  for (uint64_t w : w_)
    if (w) return false;
  return true;
}

uint64_t BitString::to_uint() const { return w_.empty() ? 0 : w_[0]; }

Bytes BitString::to_bytes() const {
  Bytes out((n_ + 7) / 8, 0);
  for (size_t i = 0; i < out.size(); ++i) out[i] = static_cast<uint8_t>(w_[i >> 3] >> (8 * (i & 7)));
  return out;
}

std::string BitString::to_string() const {
  std::string s(n_, '0');
  for (size_t i = 0; i < n_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

bool masked_equal(const BitString& a, const BitString& b, const BitString& mask) {
  if (a.size() != b.size() || a.size() != mask.size())
    throw std::invalid_argument("bitstring length mismatch");
  return simd::active().masked_equal(a.words(), b.words(), mask.words(), a.word_count());
}

bool parity_where_clear(const BitString& a, const BitString& mask) {
  if (a.size() != mask.size()) throw std::invalid_argument("bitstring length mismatch");
  // Padding bits of a are zero, so the complemented padding of mask is harmless.
  return simd::active().popcount_andnot(a.words(), mask.words(), a.word_count()) & 1;
}

Bytes xor_bytes(const Bytes& a, const Bytes& b) {
  if (a.size() != b.size()) throw std::invalid_argument("byte string length mismatch");
  Bytes r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] ^ b[i];
  return r;
}

}  // namespace everlast
