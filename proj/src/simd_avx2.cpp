// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/simd.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>

#include <bit>

namespace everlast::simd {
namespace {

#define EVERLAST_AVX2 __attribute__((target("avx2")))

// Nibble-lookup popcount (Mula): per-byte counts, then sad against zero.
EVERLAST_AVX2 inline __m256i popcnt_bytes(__m256i v) {
  const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                       0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
  __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
  return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

EVERLAST_AVX2 uint64_t hsum(__m256i acc) {
  alignas(32) uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

EVERLAST_AVX2 void xor_words(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n) {
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(va, vb));
  }
  for (; i < n; ++i) dst[i] = a[i] ^ b[i];
}

EVERLAST_AVX2 uint64_t popcount(const uint64_t* a, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    acc = _mm256_add_epi64(acc, popcnt_bytes(va));
  }
  uint64_t c = hsum(acc);
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

EVERLAST_AVX2 uint64_t popcount_andnot(const uint64_t* a, const uint64_t* mask, size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
    acc = _mm256_add_epi64(acc, popcnt_bytes(_mm256_andnot_si256(vm, va)));
  }
  uint64_t c = hsum(acc);
  for (; i < n; ++i) c += std::popcount(a[i] & ~mask[i]);
  return c;
}

EVERLAST_AVX2 bool masked_equal(const uint64_t* a, const uint64_t* b, const uint64_t* mask,
                                size_t n) {
  __m256i acc = _mm256_setzero_si256();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vm = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i));
    acc = _mm256_or_si256(acc, _mm256_and_si256(_mm256_xor_si256(va, vb), vm));
  }
  uint64_t tail = 0;
  for (; i < n; ++i) tail |= (a[i] ^ b[i]) & mask[i];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

}  // namespace

const Kernels* avx2_kernels() {
  static const Kernels k{xor_words, popcount, popcount_andnot, masked_equal};
  return &k;
}

bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }

}  // namespace everlast::simd

#else

namespace everlast::simd {
const Kernels* avx2_kernels() { return nullptr; }
bool cpu_has_avx2() { return false; }
}  // namespace everlast::simd

#endif
