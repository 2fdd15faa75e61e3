// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Source extraction for the Java-8 class subset described in
// docs/grammar.md. The parser records what the mapping stages need
// (identifiers, direct field accesses, call sites) and nothing more.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/class_model.hpp"

namespace dropin {

struct SourceError {
  std::string locator;
  int line = 0;
  int column = 0;
  std::string message;

  std::string to_string() const;
};

struct ParseResult {
  /// Every class whose body was fully parsed, outer classes before the
  /// classes nested in them.
  std::vector<ClassDescriptor> classes;
  /// Set when parsing stopped early; `classes` then holds the partial result.
  std::optional<SourceError> error;

  bool partial() const { return error.has_value(); }
};

/// Never throws on malformed source; see ParseResult::error.
ParseResult parse_source(std::string_view text, std::string_view locator);

}  // namespace dropin
