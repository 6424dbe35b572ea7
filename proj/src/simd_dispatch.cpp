// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <cstring>

#include "everlast/simd.hpp"

namespace everlast::simd {
namespace {

Backend pick_default() {
  const char* env = std::getenv("EVERLAST_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::kScalar;
  if (avx2_kernels() != nullptr && cpu_has_avx2()) return Backend::kAvx2;
  return Backend::kScalar;
}

Backend& current() {
  static Backend b = pick_default();
  return b;
}

}  // namespace

const Kernels& active() {
  return current() == Backend::kAvx2 ? *avx2_kernels() : scalar_kernels();
}

Backend active_backend() { return current(); }

bool set_backend(Backend b) {
  if (b == Backend::kAvx2 && (avx2_kernels() == nullptr || !cpu_has_avx2())) return false;
  current() = b;
  return true;
}

const char* backend_name(Backend b) { return b == Backend::kAvx2 ? "avx2" : "scalar"; }

}  // namespace everlast::simd
