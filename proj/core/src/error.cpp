// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/error.hpp"

namespace dropin {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformed:
      return "malformed input";
    case ErrorKind::kVersionMismatch:
      return "version mismatch";
    case ErrorKind::kInvalidDescriptor:
      return "invalid descriptor";
    case ErrorKind::kCycle:
      return "inheritance cycle";
    case ErrorKind::kUnknownField:
      return "unknown field";
    case ErrorKind::kRenameCollision:
      return "rename collision";
    case ErrorKind::kDimensionMismatch:
      return "dimension mismatch";
    case ErrorKind::kEmptyCorpus:
      return "empty corpus";
    case ErrorKind::kEmptyIndex:
      return "empty index";
    case ErrorKind::kInvalidQuery:
      return "invalid query class";
    case ErrorKind::kInvalidConfig:
      return "invalid configuration";
    case ErrorKind::kNotFound:
      return "not found";
    case ErrorKind::kCoverage:
      return "coverage error";
    case ErrorKind::kIo:
      return "i/o error";
  }
  return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

MalformedInput::MalformedInput(std::size_t byte_offset, const std::string& message)
    : Error(ErrorKind::kMalformed, message + " (at byte " + std::to_string(byte_offset) + ")"),
      byte_offset_(byte_offset) {}

}  // namespace dropin
