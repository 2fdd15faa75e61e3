// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dropin {

enum class ErrorKind {
  kMalformed,          // interchange/model/index bytes could not be decoded
  kVersionMismatch,    // unknown schema or file version
  kInvalidDescriptor,  // descriptor violates a class-model invariant
  kCycle,              // supertype chain revisits a class
  kUnknownField,
  kRenameCollision,
  kDimensionMismatch,
  kEmptyCorpus,
  kEmptyIndex,
  kInvalidQuery,
  kInvalidConfig,
  kNotFound,
  kCoverage,  // ideal mapping does not cover the query's methods
  kIo,
};

std::string_view to_string(ErrorKind kind);

/// Domain error raised by every dropin component. The CLI maps kinds onto
/// exit codes (kIo -> 2, kInvalidConfig -> 3, everything else -> 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Decoding failure carrying the byte offset of the offending input.
class MalformedInput : public Error {
 public:
  MalformedInput(std::size_t byte_offset, const std::string& message);

  std::size_t byte_offset() const noexcept { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace dropin
