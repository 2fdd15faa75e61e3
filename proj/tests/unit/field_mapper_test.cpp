// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "dropin/corpus.hpp"
#include "dropin/field_mapper.hpp"
#include "test_support.hpp"

namespace dropin {
namespace {

FieldDescriptor field(bool is_static, bool is_final) {
  return {"f", TypeRef::primitive("int"), is_static, is_final, Visibility::kPrivate};
}

TEST(ModifierCompatibility, StaticMustAgreeAndFinalOnlyTightensToFinal) {
  EXPECT_TRUE(modifier_compatibility(field(false, false), field(false, false)));
  EXPECT_TRUE(modifier_compatibility(field(false, true), field(false, false)));
  EXPECT_TRUE(modifier_compatibility(field(false, true), field(false, true)));
  EXPECT_FALSE(modifier_compatibility(field(false, false), field(false, true)));
  EXPECT_FALSE(modifier_compatibility(field(true, false), field(false, false)));
  EXPECT_FALSE(modifier_compatibility(field(false, false), field(true, false)));
  EXPECT_TRUE(modifier_compatibility(field(true, true), field(true, true)));
}

class FieldMapTest : public ::testing::Test {
 protected:
  void SetUp() override {
    classes = testing::load_java_dir(testing::fixture_path("walkthrough"));
    std::vector<TokenBag> bags;
    for (const auto& c : classes) bags.push_back(class_tokens(c));
    model = train_model(bags, testing::small_training_config());
    index = index_build(classes, model);
  }
  FieldMap map(const std::string& q, const std::string& r, FieldConfig cfg = {}, double tt = 0.8) {
    const auto& qc = testing::by_name(classes, q);
    const auto& rc = testing::by_name(classes, r);
    const Corpus corpus(classes);
    const auto ts = type_similarity_matrix(qc, rc, index, model, tt, &corpus);
    return field_map(qc, rc, ts, model, cfg);
  }
  std::vector<ClassDescriptor> classes;
  EmbeddingModel model;
  ClassIndex index;
};

TEST_F(FieldMapTest, VectorFieldsLineUpWithArrayList) {
  const auto sigma = map("java.util.ArrayList", "java.util.Vector");
  ASSERT_NE(sigma.find("size"), nullptr);
  EXPECT_EQ(sigma.find("size")->candidate_field, "elementCount");
  ASSERT_NE(sigma.find("elementData"), nullptr);
  EXPECT_EQ(sigma.find("elementData")->candidate_field, "elementData");
}

TEST_F(FieldMapTest, IdentityMapsEveryFieldToItself) {
  const auto sigma = map("java.util.ArrayList", "java.util.ArrayList");
  ASSERT_EQ(sigma.pairs.size(), 2u);
  for (const auto& p : sigma.pairs) {
    EXPECT_EQ(p.query_field, p.candidate_field);
    EXPECT_NEAR(p.score, 1.0, 1e-9);
  }
  EXPECT_NEAR(sigma.aggregate_score(), 2.0, 1e-9);
}

TEST_F(FieldMapTest, MutableFieldNeverLandsOnFinal) {
  const auto sigma = map("java.util.ArrayList", "jadax.core.ImmutableList");
  EXPECT_EQ(sigma.find("elementData"), nullptr);
  EXPECT_EQ(sigma.scores(0, 0), kForbidden);
}

TEST_F(FieldMapTest, ScoresStayInRangeAndPairsClearThreshold) {
  for (const auto& r : classes) {
    for (double fw : {0.0, 0.5, 1.0}) {
      const auto sigma = map("java.util.ArrayList", r.qualified_name, {fw, 0.5});
      for (std::size_t i = 0; i < sigma.scores.rows(); ++i)
        for (std::size_t j = 0; j < sigma.scores.cols(); ++j) {
          EXPECT_GE(sigma.scores(i, j), -1.0 - 1e-9);
          EXPECT_LE(sigma.scores(i, j), 1.0 + 1e-9);
        }
      for (const auto& p : sigma.pairs) EXPECT_GE(p.score, 0.5);
    }
  }
}

TEST_F(FieldMapTest, RaisingFtNeverGrowsSigma) {
  for (const auto& r : classes) {
    std::size_t prev = SIZE_MAX;
    for (double ft : {-1.0, 0.0, 0.5, 0.9, 1.0}) {
      const auto n = map("java.util.ArrayList", r.qualified_name, {0.5, ft}).pairs.size();
      EXPECT_LE(n, prev) << r.qualified_name;
      prev = n;
    }
  }
}

TEST_F(FieldMapTest, UsageIsOneWhenBothSidesAreUnused) {
  const auto q = testing::parse_java("class A { int x; }")[0];
  const auto r = testing::parse_java("class B { int y; }")[0];
  const auto ts = type_similarity_matrix(q, r, index, model, 0.8);
  const auto sigma = field_map(q, r, ts, model, {0.5, 0.5});
  EXPECT_DOUBLE_EQ(sigma.usage(0, 0), 1.0);
  ASSERT_EQ(sigma.pairs.size(), 1u);
  EXPECT_DOUBLE_EQ(sigma.pairs[0].score, 1.0);
}

TEST_F(FieldMapTest, UsageIsZeroWhenOnlyOneSideIsUsed) {
  const auto q = testing::parse_java("class A { int x; int get() { return x; } }")[0];
  const auto r = testing::parse_java("class B { int y; }")[0];
  const auto ts = type_similarity_matrix(q, r, index, model, 0.8);
  const auto sigma = field_map(q, r, ts, model, {1.0, -1.0});
  // Readers differ (one empty): 0; writers both empty: 1.
  EXPECT_DOUBLE_EQ(sigma.usage(0, 0), 0.5);
}

}  // namespace
}  // namespace dropin
