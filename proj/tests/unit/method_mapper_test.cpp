// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dropin/corpus.hpp"
#include "dropin/error.hpp"
#include "dropin/method_mapper.hpp"
#include "test_support.hpp"

namespace dropin {
namespace {

MethodDescriptor signature(std::vector<TypeRef> params) {
  MethodDescriptor m;
  m.name = "m";
  for (std::size_t i = 0; i < params.size(); ++i) m.parameters.push_back({"p" + std::to_string(i), params[i]});
  return m;
}

TypeSimilarityMatrix primitive_ts() {
  const std::vector<TypeRef> types = {TypeRef::primitive("int"), TypeRef::primitive("boolean"), TypeRef::variable("E")};
  TypeSimilarityMatrix ts(types, types, 0.8);
  for (const auto& a : types)
    for (const auto& b : types) ts.set(a, b, type_cast_check(a, b, nullptr) ? 1.0 : kForbidden);
  return ts;
}

TEST(ParameterMapScore, NormalizationEdgeCases) {
  const auto ts = primitive_ts();
  const auto I = TypeRef::primitive("int"), B = TypeRef::primitive("boolean"), E = TypeRef::variable("E");
  EXPECT_DOUBLE_EQ(parameter_map_score(signature({}), signature({}), ts).score, 1.0);
  const auto one_vs_none = parameter_map_score(signature({I}), signature({}), ts);
  EXPECT_DOUBLE_EQ(one_vs_none.score, -1.0);
  EXPECT_TRUE(one_vs_none.pairs.empty());
  EXPECT_DOUBLE_EQ(parameter_map_score(signature({}), signature({I}), ts).score, -1.0);
  EXPECT_DOUBLE_EQ(parameter_map_score(signature({I, E}), signature({I, E}), ts).score, 1.0);
  // Only int matches: 2 * 1 / 2 - 1.
  const auto half = parameter_map_score(signature({I, E}), signature({I, B}), ts);
  EXPECT_DOUBLE_EQ(half.score, 0.0);
  EXPECT_EQ(half.pairs, (Matching{{0, 0}}));
  // Reordered parameters still pair up.
  const auto swapped = parameter_map_score(signature({I, B}), signature({B, I}), ts);
  EXPECT_DOUBLE_EQ(swapped.score, 1.0);
  EXPECT_EQ(swapped.pairs, (Matching{{0, 1}, {1, 0}}));
  // Three vs one: 2 * 1 / 3 - 1.
  EXPECT_NEAR(parameter_map_score(signature({I, I, I}), signature({I}), ts).score, -1.0 / 3.0, 1e-12);
}

TEST(RewriteFields, RenamesFieldsAccessesAndUnshadowedTokens) {
  const auto r = testing::parse_java(R"(
    class Vec {
      int elementCount; int other;
      int size() { return elementCount; }
      void set(int elementCount) { this.elementCount = elementCount; }
    })")[0];
  FieldMap sigma;
  sigma.pairs = {{"size", "elementCount", 1.0}};
  const auto out = rewrite_fields(r, sigma);
  EXPECT_EQ(out.fields[0].name, "size");
  EXPECT_EQ(out.fields[1].name, "other");
  EXPECT_EQ(find_method(out, "size()")->fields_read, std::set<std::string>{"size"});
  EXPECT_EQ(find_method(out, "size()")->body_tokens, std::vector<std::string>{"size"});
  const auto* set = find_method(out, "set(int)");
  EXPECT_EQ(set->fields_written, std::set<std::string>{"size"});
  // The parameter keeps its name, and so do tokens that refer to it.
  EXPECT_EQ(set->parameters[0].name, "elementCount");
  EXPECT_EQ(set->body_tokens, (std::vector<std::string>{"elementCount", "elementCount"}));
  EXPECT_TRUE(validate_descriptor(out).empty());
  EXPECT_EQ(rewrite_fields(out, sigma), out);
  EXPECT_EQ(rewrite_fields(r, FieldMap{}), r);
}

TEST(RewriteFields, CollisionIsAnError) {
  const auto r = testing::parse_java("class C { int a; int b; }")[0];
  FieldMap sigma;
  sigma.pairs = {{"b", "a", 1.0}};
  try {
    rewrite_fields(r, sigma);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kRenameCollision);
  }
  sigma.pairs = {{"b", "a", 1.0}, {"a", "b", 1.0}};
  const auto swapped = rewrite_fields(r, sigma);
  EXPECT_EQ(swapped.fields[0].name, "b");
  EXPECT_EQ(swapped.fields[1].name, "a");
}

class MethodMapTest : public ::testing::Test {
 protected:
  void SetUp() override {
    classes = testing::load_java_dir(testing::fixture_path("walkthrough"));
    std::vector<TokenBag> bags;
    for (const auto& c : classes) bags.push_back(class_tokens(c));
    model = train_model(bags, testing::small_training_config());
    index = index_build(classes, model);
  }
  MethodMap map(const std::string& q, const std::string& r, MethodConfig cfg = {}) {
    const auto& qc = testing::by_name(classes, q);
    const auto& rc = testing::by_name(classes, r);
    const Corpus corpus(classes);
    const auto ts = type_similarity_matrix(qc, rc, index, model, 0.8, &corpus);
    const auto sigma = field_map(qc, rc, ts, model);
    return method_map(qc, rc, sigma, ts, model, cfg);
  }
  std::vector<ClassDescriptor> classes;
  EmbeddingModel model;
  ClassIndex index;
};

TEST_F(MethodMapTest, IdentityMapsEveryMethodAtFullScore) {
  for (const auto& c : classes) {
    const auto alpha = map(c.qualified_name, c.qualified_name);
    ASSERT_EQ(alpha.entries.size(), public_methods(c).size());
    for (const auto& e : alpha.entries) {
      ASSERT_TRUE(e.candidate_key.has_value()) << c.qualified_name << " " << e.query_key;
      EXPECT_NEAR(e.score, 1.0, 1e-9);
      // Methods whose token bags and signatures coincide (deposit/withdraw
      // both touch {amount, balance}) tie, and the smaller key wins.
      EXPECT_LE(*e.candidate_key, e.query_key);
    }
  }
  for (const char* name : {"java.util.ArrayList", "java.util.Vector", "jadax.core.ImmutableList"}) {
    for (const auto& e : map(name, name).entries) EXPECT_EQ(e.candidate_key, e.query_key);
  }
}

TEST_F(MethodMapTest, BooleanListSetIsTypeIncompatible) {
  const auto alpha = map("java.util.ArrayList", "abacus.util.BooleanList");
  const auto* set = alpha.find("set(int,E)");
  ASSERT_NE(set, nullptr);
  EXPECT_FALSE(set->candidate_key.has_value());
  EXPECT_TRUE(set->parameter_pairs.empty());
}

TEST_F(MethodMapTest, MappedCountIsAntitoneInMt) {
  for (const auto& r : classes) {
    std::size_t prev = SIZE_MAX;
    for (double mt : {-1.0, 0.0, 0.5, 0.9, 1.0}) {
      MethodConfig cfg;
      cfg.mt = mt;
      const auto alpha = map("java.util.ArrayList", r.qualified_name, cfg);
      EXPECT_LE(alpha.mapped_count(), prev);
      prev = alpha.mapped_count();
      for (const auto& e : alpha.entries)
        if (e.candidate_key) {
          EXPECT_GE(e.score, mt);
        }
    }
  }
}

TEST_F(MethodMapTest, WeightProjections) {
  MethodConfig emb_only, par_only;
  emb_only.mw = 1.0;
  par_only.mw = 0.0;
  const auto a = map("java.util.ArrayList", "java.util.Vector", emb_only);
  const auto b = map("java.util.ArrayList", "java.util.Vector", par_only);
  for (std::size_t i = 0; i < a.ms.rows(); ++i)
    for (std::size_t j = 0; j < a.ms.cols(); ++j) {
      EXPECT_DOUBLE_EQ(a.ms(i, j), a.embedding(i, j));
      EXPECT_DOUBLE_EQ(b.ms(i, j), b.parameter(i, j));
    }
}

TEST_F(MethodMapTest, StrictStaticForbidsMixedPairs) {
  const auto q = testing::parse_java("class Q { public static int count() { return 0; } }")[0];
  const auto r = testing::parse_java("class R { public int count() { return 0; } }")[0];
  const auto ts = type_similarity_matrix(q, r, index, model, 0.8);
  const auto sigma = field_map(q, r, ts, model);
  EXPECT_EQ(method_map(q, r, sigma, ts, model).mapped_count(), 1u);
  MethodConfig strict;
  strict.strict_static = true;
  const auto alpha = method_map(q, r, sigma, ts, model, strict);
  EXPECT_EQ(alpha.mapped_count(), 0u);
  EXPECT_EQ(alpha.ms(0, 0), kForbidden);
}

TEST_F(MethodMapTest, StrictReturnNeedsATypeEntry) {
  const auto q = testing::parse_java("class Q { public boolean flag() { return true; } }")[0];
  const auto r = testing::parse_java("class R { public int flag() { return 0; } }")[0];
  const auto ts = type_similarity_matrix(q, r, index, model, 0.8);
  const auto sigma = field_map(q, r, ts, model);
  EXPECT_EQ(method_map(q, r, sigma, ts, model).mapped_count(), 1u);
  MethodConfig strict;
  strict.strict_return = true;
  EXPECT_EQ(method_map(q, r, sigma, ts, model, strict).mapped_count(), 0u);
}

TEST_F(MethodMapTest, ScoresStayInRange) {
  for (const auto& r : classes) {
    const auto alpha = map("java.util.ArrayList", r.qualified_name);
    for (std::size_t i = 0; i < alpha.ms.rows(); ++i)
      for (std::size_t j = 0; j < alpha.ms.cols(); ++j) {
        for (double s : {alpha.ms(i, j), alpha.embedding(i, j), alpha.parameter(i, j)}) {
          EXPECT_GE(s, -1.0 - 1e-9);
          EXPECT_LE(s, 1.0 + 1e-9);
        }
      }
  }
}

}  // namespace
}  // namespace dropin
