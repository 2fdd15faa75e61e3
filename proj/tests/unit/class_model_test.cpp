// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dropin/class_model.hpp"
#include "dropin/error.hpp"
#include "dropin/interchange.hpp"
#include "test_support.hpp"

namespace dropin {
namespace {

ClassDescriptor tiny() {
  ClassDescriptor c;
  c.qualified_name = "demo.Box";
  c.simple_name = "Box";
  c.type_parameters = {"T"};
  c.fields.push_back({"items", TypeRef::array_of(TypeRef::variable("T")), false, false, Visibility::kPrivate});
  MethodDescriptor get;
  get.name = "get";
  get.parameters = {{"i", TypeRef::primitive("int")}};
  get.return_type = TypeRef::variable("T");
  get.visibility = Visibility::kPublic;
  get.fields_read = {"items"};
  get.body_tokens = {"return", "items", "i"};
  c.methods.push_back(get);
  return c;
}

TEST(TypeRef, SpellsArraysAndPrimitives) {
  EXPECT_EQ(TypeRef::array_of(TypeRef::named("Object"), 2).to_string(), "Object[][]");
  EXPECT_EQ(TypeRef::primitive("int").to_string(), "int");
  const auto arr = TypeRef::array_of(TypeRef::primitive("boolean"));
  EXPECT_EQ(arr.element(), TypeRef::primitive("boolean"));
  EXPECT_TRUE(arr.is_reference());
}

TEST(MethodKey, UsesErasedParameterTypes) {
  MethodDescriptor m;
  m.name = "set";
  m.parameters = {{"i", TypeRef::primitive("int")}, {"e", TypeRef::variable("E")}};
  EXPECT_EQ(method_key(m), "set(int,E)");
  m.parameters.clear();
  EXPECT_EQ(method_key(m), "set()");
}

TEST(Validate, AcceptsWellFormedClass) { EXPECT_TRUE(validate_descriptor(tiny()).empty()); }

TEST(Validate, FlagsUndeclaredFieldAccess) {
  auto c = tiny();
  c.methods[0].fields_written.insert("ghost");
  const auto v = validate_descriptor(c);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_NE(v[0].message.find("ghost"), std::string::npos);
}

TEST(Validate, FlagsDuplicateSignaturesAndVoidParameters) {
  auto c = tiny();
  c.methods.push_back(c.methods[0]);
  c.methods[0].parameters.push_back({"v", TypeRef::primitive("void")});
  const auto v = validate_descriptor(c);
  EXPECT_GE(v.size(), 1u);
  bool void_param = false;
  for (const auto& x : v) void_param |= x.message.find("void") != std::string::npos;
  EXPECT_TRUE(void_param);
}

TEST(Validate, SelfSupertypeIsRejected) {
  auto c = tiny();
  c.supertypes = {"demo.Box"};
  EXPECT_FALSE(validate_descriptor(c).empty());
}

TEST(PublicMethods, SkipsConstructorsUnlessAsked) {
  auto c = tiny();
  MethodDescriptor ctor;
  ctor.name = std::string(kConstructorName);
  ctor.visibility = Visibility::kPublic;
  c.methods.insert(c.methods.begin(), ctor);
  EXPECT_EQ(public_methods(c).size(), 1u);
  EXPECT_EQ(public_methods(c, true).size(), 2u);
}

TEST(Interchange, RoundTripIsCanonical) {
  const std::vector<ClassDescriptor> in = {tiny()};
  const auto bytes = save_interchange(in);
  const auto back = load_interchange(bytes);
  ASSERT_EQ(back.size(), 1u);
  EXPECT_EQ(back[0], in[0]);
  EXPECT_EQ(save_interchange(back), bytes);
}

TEST(Interchange, ParsedFixturesRoundTrip) {
  const auto classes = testing::load_java_dir(testing::fixture_path("walkthrough"));
  const auto bytes = save_interchange(classes);
  EXPECT_EQ(load_interchange(bytes), classes);
}

TEST(Interchange, MissingHeaderIsMalformed) {
  EXPECT_THROW(load_interchange("{\"qualified_name\":\"x\"}\n"), MalformedInput);
}

TEST(Interchange, UnknownVersionIsReported) {
  try {
    load_interchange("{\"format\":\"cf-class\",\"version\":2}\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kVersionMismatch);
  }
}

TEST(Interchange, BadJsonCarriesByteOffset) {
  const std::string header = "{\"format\":\"cf-class\",\"version\":1}\n";
  try {
    load_interchange(header + "{\"a\": }\n");
    FAIL();
  } catch (const MalformedInput& e) {
    EXPECT_GE(e.byte_offset(), header.size());
    EXPECT_LT(e.byte_offset(), header.size() + 8);
  }
}

TEST(Interchange, InvalidDescriptorIsRejectedOnLoadAndSave) {
  auto c = tiny();
  c.fields.push_back(c.fields[0]);
  const std::vector<ClassDescriptor> bad = {c};
  EXPECT_THROW(save_interchange(bad), Error);
  std::string bytes = save_interchange(std::vector<ClassDescriptor>{tiny()});
  const auto pos = bytes.find("\"fields\":[");
  bytes.insert(
      pos + 10,
      R"({"is_final":false,"is_static":false,"name":"items","type":{"kind":"primitive","name":"int"},"visibility":"private"},)");
  try {
    load_interchange(bytes);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidDescriptor);
  }
}

}  // namespace
}  // namespace dropin
