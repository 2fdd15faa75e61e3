// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dropin/call_graph.hpp"
#include "dropin/tokenizer.hpp"
#include "test_support.hpp"

namespace dropin {
namespace {

using Words = std::vector<std::string>;

TEST(SplitIdentifier, CamelSnakeAndDigits) {
  EXPECT_EQ(split_identifier("elementData"), (Words{"element", "data"}));
  EXPECT_EQ(split_identifier("ArrayList"), (Words{"array", "list"}));
  EXPECT_EQ(split_identifier("MAX_VALUE"), (Words{"max", "value"}));
  EXPECT_EQ(split_identifier("utf8Len"), (Words{"utf", "8", "len"}));
  EXPECT_EQ(split_identifier("a$b__c"), (Words{"a", "b", "c"}));
  EXPECT_EQ(split_identifier("o"), (Words{"o"}));
  EXPECT_TRUE(split_identifier("_$_").empty());
}

TEST(SplitIdentifier, UppercaseRunsStayTogether) {
  // Boundaries are only lower->upper, so an acronym run is one word.
  EXPECT_EQ(split_identifier("URLParser"), (Words{"urlparser"}));
  EXPECT_EQ(split_identifier("parseURL"), (Words{"parse", "url"}));
}

TEST(ClassTokens, ArrayListFragment) {
  const auto classes = testing::load_java_dir(testing::fixture_path("walkthrough"));
  const auto bag = class_tokens(testing::by_name(classes, "java.util.ArrayList"));
  const std::set<std::string> got(bag.begin(), bag.end());
  const std::set<std::string> want = {"array", "list",  "element", "data", "size", "contains",
                                      "o",     "index", "of",      "set",  "i",    "check"};
  EXPECT_EQ(got, want);
}

TEST(ClassTokens, IncludesPrivateMethodsAndConstructorParameters) {
  const auto c = testing::parse_java(R"(
    class Gate {
      int width;
      Gate(int openWidth) { }
      private void swing(int angle) { creak(); }
    })")[0];
  EXPECT_EQ(class_tokens(c), (Words{"gate", "width", "open", "width", "swing", "angle", "creak"}));
}

TEST(MethodTokens, InlinesSelfCalleesDepthFirst) {
  const auto c = testing::parse_java(R"(
    class Chain {
      int total;
      void a(int x) { b(); }
      void b() { int tmp = total; c(); }
      void c() { log.info(); }
    })")[0];
  const auto g = build_call_graph(c);
  const auto& a = *find_method(c, "a(int)");
  EXPECT_EQ(method_tokens(a, c, g), (Words{"b", "x", "c", "total", "tmp", "info"}));
  EXPECT_EQ(method_tokens(a, c, g, {1, false}), (Words{"b", "x", "c", "total", "tmp"}));
  EXPECT_EQ(method_tokens(a, c, g, {0, false}), (Words{"b", "x"}));
  EXPECT_EQ(method_tokens(a, c, g, {0, true}), (Words{"a", "b", "x"}));
}

TEST(MethodTokens, RecursionIsInlinedOncePerPath) {
  const auto c = testing::parse_java("class R { void ping() { pong(); } void pong() { ping(); } }")[0];
  const auto g = build_call_graph(c);
  EXPECT_EQ(method_tokens(*find_method(c, "ping()"), c, g), (Words{"pong", "ping"}));
}

TEST(MethodTokens, AccessedFieldsAreSorted) {
  const auto c = testing::parse_java("class F { int zeta; int alpha; void f() { zeta = alpha; } }")[0];
  const auto g = build_call_graph(c);
  EXPECT_EQ(method_tokens(*find_method(c, "f()"), c, g), (Words{"alpha", "zeta"}));
}

}  // namespace
}  // namespace dropin
