// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

// On-disk container for serialized artifacts (.eca):
//   "ECA\0" | u16 version | u16 kind length | kind | u64 payload length |
//   payload | 32-byte BLAKE2b-256 over everything before it.

#pragma once

#include <string>

#include "everlast/rng.hpp"

namespace everlast::artifact {

inline constexpr uint16_t kVersion = 1;

struct ArtifactFile {
  std::string kind;
  Bytes payload;
};

Bytes encode(const ArtifactFile& a);
// Throws FormatError on bad magic, version, length or checksum.
ArtifactFile decode(const Bytes& b);

void write(const std::string& path, const ArtifactFile& a);
// Throws ConsumedError if only path + ".consumed" exists, FormatError if
// the file is malformed or its kind differs from `kind`, and
// std::runtime_error if it cannot be read.
ArtifactFile read(const std::string& path, const std::string& kind);
// Renames path to path + ".consumed".
void consume(const std::string& path);

}  // namespace everlast::artifact
