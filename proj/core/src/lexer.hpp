// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dropin::detail {

enum class TokenKind { kIdentifier, kKeyword, kLiteral, kOperator, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
  std::size_t offset = 0;

  bool is(std::string_view s) const {
    return (kind == TokenKind::kOperator || kind == TokenKind::kKeyword) && text == s;
  }
  bool is_identifier() const { return kind == TokenKind::kIdentifier; }
};

struct LexError : std::runtime_error {
  LexError(int line, int column, const std::string& msg) : std::runtime_error(msg), line(line), column(column) {}
  int line;
  int column;
};

/// Splits Java source into tokens. Comments and whitespace are dropped; `>`
/// is always emitted as a single-character token so that nested generic
/// closers need no special casing (the parser reassembles shift operators).
/// The final token has kind kEnd.
std::vector<Token> lex(std::string_view source);

bool is_java_keyword(std::string_view word);

}  // namespace dropin::detail
