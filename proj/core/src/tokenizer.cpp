// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dropin {

namespace {

enum class CharClass { kLower, kUpper, kDigit, kOther, kSeparator };

CharClass classify(unsigned char c) {
  if (c == '_' || c == '$') return CharClass::kSeparator;
  if (std::isdigit(c)) return CharClass::kDigit;
  if (std::isupper(c)) return CharClass::kUpper;
  if (std::islower(c)) return CharClass::kLower;
  return CharClass::kOther;  // non-ASCII bytes behave like caseless letters
}

bool is_letter(CharClass k) { return k == CharClass::kLower || k == CharClass::kUpper || k == CharClass::kOther; }

void append_split(std::string_view id, TokenBag& out) {
  for (auto& w : split_identifier(id)) out.push_back(std::move(w));
}

void append_method_body(const MethodDescriptor& m, TokenBag& out) {
  for (const auto& inv : m.invoked_methods) append_split(inv.callee, out);
  for (const auto& p : m.parameters) append_split(p.name, out);
  std::set<std::string> accessed(m.fields_read.begin(), m.fields_read.end());
  accessed.insert(m.fields_written.begin(), m.fields_written.end());
  for (const auto& f : accessed) append_split(f, out);
  for (const auto& v : m.local_variables) append_split(v, out);
}

void inline_callees(const ClassDescriptor& owner, const CallGraph& graph, int depth, std::vector<std::string>& path,
                    TokenBag& out) {
  if (depth <= 0) return;
  for (const auto& key : graph.callees(path.back())) {
    if (std::find(path.begin(), path.end(), key) != path.end()) continue;
    const MethodDescriptor* callee = find_method(owner, key);
    if (callee == nullptr) continue;
    append_method_body(*callee, out);
    path.push_back(key);
    inline_callees(owner, graph, depth - 1, path, out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::string> split_identifier(std::string_view id) {
  std::vector<std::string> words;
  std::string word;
  CharClass prev = CharClass::kSeparator;
  for (const char ch : id) {
    const auto c = static_cast<unsigned char>(ch);
    const CharClass k = classify(c);
    if (k == CharClass::kSeparator) {
      if (!word.empty()) words.push_back(std::move(word));
      word.clear();
      prev = k;
      continue;
    }
    const bool boundary =
        !word.empty() && ((prev == CharClass::kLower && k == CharClass::kUpper) ||
                          (is_letter(prev) && k == CharClass::kDigit) || (prev == CharClass::kDigit && is_letter(k)));
    if (boundary) {
      words.push_back(std::move(word));
      word.clear();
    }
    word += static_cast<char>(std::tolower(c));
    prev = k;
  }
  if (!word.empty()) words.push_back(std::move(word));
  return words;
}

TokenBag class_tokens(const ClassDescriptor& c) {
  TokenBag out;
  append_split(c.simple_name, out);
  for (const auto& f : c.fields) append_split(f.name, out);
  for (const auto& m : c.methods) {
    if (!m.is_constructor()) append_split(m.name, out);
    for (const auto& p : m.parameters) append_split(p.name, out);
    for (const auto& inv : m.invoked_methods) append_split(inv.callee, out);
  }
  return out;
}

TokenBag method_tokens(const MethodDescriptor& m, const ClassDescriptor& owner, const CallGraph& graph,
                       const MethodTokenOptions& options) {
  TokenBag out;
  if (options.include_own_name && !m.is_constructor()) append_split(m.name, out);
  append_method_body(m, out);
  std::vector<std::string> path{method_key(m)};
  inline_callees(owner, graph, options.inline_depth, path, out);
  return out;
}

}  // namespace dropin
