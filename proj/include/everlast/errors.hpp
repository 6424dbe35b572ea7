// Copyright 2026 The everlast Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace everlast {

// Raised when a quantum handle (or anything owning one) is used after it
// was measured, deleted or otherwise consumed.
class ConsumedError : public std::logic_error {
 public:
  explicit ConsumedError(const std::string& what) : std::logic_error(what) {}
};

// Malformed serialized data, bad layouts, mismatched shapes.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace everlast
