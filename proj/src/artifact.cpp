// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#include "everlast/artifact.hpp"

#include <sodium.h>

#include <filesystem>
#include <fstream>
#include <iterator>
#include <stdexcept>

#include "everlast/errors.hpp"

namespace everlast::artifact {
namespace {

constexpr uint8_t kMagic[4] = {'E', 'C', 'A', 0};
constexpr size_t kSumBytes = 32;

Bytes checksum(const uint8_t* data, size_t n) {
  static const int ready = sodium_init();
  if (ready < 0) throw std::runtime_error("libsodium initialization failed");
  Bytes out(kSumBytes);
  crypto_generichash(out.data(), out.size(), data, n, nullptr, 0);
  return out;
}

}  // namespace

Bytes encode(const ArtifactFile& a) {
  if (a.kind.size() > 0xffff) throw std::invalid_argument("artifact kind too long");
  Bytes out(kMagic, kMagic + 4);
  out.push_back(static_cast<uint8_t>(kVersion));
  out.push_back(static_cast<uint8_t>(kVersion >> 8));
  out.push_back(static_cast<uint8_t>(a.kind.size()));
  out.push_back(static_cast<uint8_t>(a.kind.size() >> 8));
  out.insert(out.end(), a.kind.begin(), a.kind.end());
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<uint8_t>(static_cast<uint64_t>(a.payload.size()) >> (8 * i)));
  out.insert(out.end(), a.payload.begin(), a.payload.end());
  Bytes sum = checksum(out.data(), out.size());
  out.insert(out.end(), sum.begin(), sum.end());
  return out;
}

ArtifactFile decode(const Bytes& b) {
  if (b.size() < 4 + 2 + 2 + 8 + kSumBytes) throw FormatError("artifact truncated");
  if (!std::equal(kMagic, kMagic + 4, b.begin())) throw FormatError("not an everlast artifact (bad magic)");
  if (checksum(b.data(), b.size() - kSumBytes) != Bytes(b.end() - kSumBytes, b.end()))
    throw FormatError("artifact checksum mismatch");
  size_t off = 4;
  uint16_t version = static_cast<uint16_t>(b[off] | (b[off + 1] << 8));
  off += 2;
  if (version != kVersion) throw FormatError("unsupported artifact version " + std::to_string(version));
  size_t klen = static_cast<size_t>(b[off] | (b[off + 1] << 8));
  off += 2;
  size_t body = b.size() - kSumBytes;
  if (klen + 8 > body - off) throw FormatError("artifact truncated");
  ArtifactFile a;
  a.kind.assign(b.begin() + static_cast<long>(off), b.begin() + static_cast<long>(off + klen));
  off += klen;
  uint64_t plen = 0;
  for (int i = 0; i < 8; ++i) plen |= uint64_t{b[off + i]} << (8 * i);
  off += 8;
  if (plen != body - off) throw FormatError("artifact payload length mismatch");
  a.payload.assign(b.begin() + static_cast<long>(off), b.begin() + static_cast<long>(body));
  return a;
}

void write(const std::string& path, const ArtifactFile& a) {
  Bytes data = encode(a);
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw std::runtime_error("cannot write " + path);
  f.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!f) throw std::runtime_error("write failed for " + path);
}

ArtifactFile read(const std::string& path, const std::string& kind) {
  namespace fs = std::filesystem;
  if (!fs::exists(path)) {
    if (fs::exists(path + ".consumed"))
      throw ConsumedError(path + " was already consumed; quantum ciphertexts cannot be copied or reused");
    throw std::runtime_error("no such file: " + path);
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  Bytes data((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
  ArtifactFile a = decode(data);
  if (a.kind != kind) throw FormatError(path + " holds a '" + a.kind + "' artifact, expected '" + kind + "'");
  return a;
}

void consume(const std::string& path) { std::filesystem::rename(path, path + ".consumed"); }

}  // namespace everlast::artifact
