// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// Word-level kernels over packed bitstrings. Every kernel exists as a
// portable scalar version and an AVX2 version; the active table is chosen
// once at startup (cpuid) and can be forced to scalar with
// EVERLAST_SIMD=scalar.

#pragma once

#include <cstddef>
#include <cstdint>

namespace everlast::simd {

enum class Backend { kScalar, kAvx2 };

struct Kernels {
  // dst[i] = a[i] ^ b[i]
  void (*xor_words)(uint64_t* dst, const uint64_t* a, const uint64_t* b, size_t n);
  uint64_t (*popcount)(const uint64_t* a, size_t n);
  // popcount(a & ~mask); the parity of this selects "bits where mask is 0".
  uint64_t (*popcount_andnot)(const uint64_t* a, const uint64_t* mask, size_t n);
  // ((a ^ b) & mask) == 0 over all words.
  bool (*masked_equal)(const uint64_t* a, const uint64_t* b, const uint64_t* mask, size_t n);
};

const Kernels& scalar_kernels();
// Null when the binary was built without AVX2 support.
const Kernels* avx2_kernels();

bool cpu_has_avx2();
const Kernels& active();
Backend active_backend();
// Override the runtime choice. Requesting AVX2 on a CPU without it is a
// no-op and returns false.
bool set_backend(Backend b);
const char* backend_name(Backend b);

}  // namespace everlast::simd
