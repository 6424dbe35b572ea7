// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>

#include "everlast/simd.hpp"

namespace everlast::simd {
namespace {

void xor_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
  for (size_t i = 0; i < n; ++i) dst[i] = a[i] ^ b[i];
}

uint64_t popcount(const uint64_t* a, size_t n) {
  uint64_t c = 0;
  for (size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

uint64_t popcount_andnot(const uint64_t* a, const uint64_t* mask, size_t n) {
  uint64_t c = 0;
  for (size_t i = 0; i < n; ++i) c += std::popcount(a[i] & ~mask[i]);
  return c;
}

bool masked_equal(const uint64_t* a, const uint64_t* b, const uint64_t* mask, size_t n) {
  uint64_t acc = 0;
  for (size_t i = 0; i < n; ++i) acc |= (a[i] ^ b[i]) & mask[i];
  return acc == 0;
}

}  // namespace

const Kernels& scalar_kernels() {
  static const Kernels k{xor_words, popcount, popcount_andnot, masked_equal};
  return k;
}

}  // namespace everlast::simd
