// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "lexer.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace dropin::detail {

namespace {

constexpr std::array<std::string_view, 50> kKeywords = {
    "abstract",  "assert",   "boolean",  "break",    "byte",    "case",         "catch",     "char",       "class",
    "const",     "continue", "default",  "do",       "double",  "else",         "enum",      "extends",    "final",
    "finally",   "float",    "for",      "goto",     "if",      "implements",   "import",    "instanceof", "int",
    "interface", "long",     "native",   "new",      "package", "private",      "protected", "public",     "return",
    "short",     "static",   "strictfp", "super",    "switch",  "synchronized", "this",      "throw",      "throws",
    "transient", "try",      "void",     "volatile", "while"};

// Longest first; '>' is deliberately absent from every multi-char entry.
constexpr std::array<std::string_view, 24> kOperators = {"<<=", "...", "->", "::", "++", "--", "&&", "||",
                                                         "==",  "!=",  "<=", "+=", "-=", "*=", "/=", "%=",
                                                         "&=",  "|=",  "^=", "<<", "!",  "~",  "?",  ":"};

bool ident_start(unsigned char c) { return std::isalpha(c) || c == '_' || c == '$' || c >= 0x80; }
bool ident_part(unsigned char c) { return ident_start(c) || std::isdigit(c); }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_trivia();
      if (pos_ >= src_.size()) break;
      out.push_back(next());
    }
    Token end;
    end.kind = TokenKind::kEnd;
    end.line = line_;
    end.column = col_;
    end.offset = pos_;
    out.push_back(end);
    return out;
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0'; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos_ < src_.size(); ++i) {
      if (src_[pos_] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
      ++pos_;
    }
  }

  void skip_trivia() {
    while (pos_ < src_.size()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && peek() != '\n') advance();
      } else if (c == '/' && peek(1) == '*') {
        const int line = line_, col = col_;
        advance(2);
        while (pos_ < src_.size() && !(peek() == '*' && peek(1) == '/')) advance();
        if (pos_ >= src_.size()) throw LexError(line, col, "unterminated comment");
        advance(2);
      } else {
        break;
      }
    }
  }

  Token make(TokenKind kind, std::size_t start, int line, int col) {
    Token t;
    t.kind = kind;
    t.text = std::string(src_.substr(start, pos_ - start));
    t.line = line;
    t.column = col;
    t.offset = start;
    return t;
  }

  Token next() {
    const std::size_t start = pos_;
    const int line = line_, col = col_;
    const auto c = static_cast<unsigned char>(peek());

    if (ident_start(c)) {
      while (pos_ < src_.size() && ident_part(static_cast<unsigned char>(peek()))) advance();
      Token t = make(TokenKind::kIdentifier, start, line, col);
      if (t.text == "true" || t.text == "false" || t.text == "null") {
        t.kind = TokenKind::kLiteral;
      } else if (is_java_keyword(t.text)) {
        t.kind = TokenKind::kKeyword;
      }
      return t;
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      lex_number();
      return make(TokenKind::kLiteral, start, line, col);
    }
    if (c == '"') {
      if (peek(1) == '"' && peek(2) == '"') {
        advance(3);
        while (pos_ < src_.size() && !(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
          if (peek() == '\\') advance();
          advance();
        }
        if (pos_ >= src_.size()) throw LexError(line, col, "unterminated text block");
        advance(3);
      } else {
        lex_quoted('"', line, col);
      }
      return make(TokenKind::kLiteral, start, line, col);
    }
    if (c == '\'') {
      lex_quoted('\'', line, col);
      return make(TokenKind::kLiteral, start, line, col);
    }
    for (auto op : kOperators) {
      if (src_.substr(pos_, op.size()) == op) {
        advance(op.size());
        return make(TokenKind::kOperator, start, line, col);
      }
    }
    static constexpr std::string_view kSingles = "(){}[];,.@=><+-*/%&|^";
    if (kSingles.find(static_cast<char>(c)) != std::string_view::npos) {
      advance();
      return make(TokenKind::kOperator, start, line, col);
    }
    throw LexError(line, col, std::string("unexpected character '") + static_cast<char>(c) + "'");
  }

  void lex_number() {
    if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X' || peek(1) == 'b' || peek(1) == 'B')) {
      advance(2);
      while (std::isxdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
    } else {
      while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
        advance();
        while (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_') advance();
      } else if (peek() == '.' && !std::isalpha(static_cast<unsigned char>(peek(1))) && peek(1) != '.') {
        advance();
      }
      if (peek() == 'e' || peek() == 'E') {
        advance();
        if (peek() == '+' || peek() == '-') advance();
        while (std::isdigit(static_cast<unsigned char>(peek()))) advance();
      }
    }
    if (std::string_view("lLfFdD").find(peek()) != std::string_view::npos && peek() != '\0') advance();
  }

  void lex_quoted(char quote, int line, int col) {
    advance();
    while (pos_ < src_.size() && peek() != quote) {
      if (peek() == '\n') throw LexError(line, col, "unterminated literal");
      if (peek() == '\\') advance();
      advance();
    }
    if (pos_ >= src_.size()) throw LexError(line, col, "unterminated literal");
    advance();
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

bool is_java_keyword(std::string_view word) {
  return std::find(kKeywords.begin(), kKeywords.end(), word) != kKeywords.end();
}

std::vector<Token> lex(std::string_view source) {
  // A leading UTF-8 byte-order mark is not part of the program text.
  if (source.substr(0, 3) == "\xEF\xBB\xBF") {
    auto tokens = Lexer(source.substr(3)).run();
    for (auto& t : tokens) t.offset += 3;
    return tokens;
  }
  return Lexer(source).run();
}

}  // namespace dropin::detail
