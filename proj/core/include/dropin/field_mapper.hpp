// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/assignment.hpp"
#include "dropin/call_graph.hpp"
#include "dropin/class_model.hpp"
#include "dropin/embedding.hpp"
#include "dropin/typesim.hpp"

namespace dropin {

/// False when exactly one side is static, or when a mutable query field
/// would land on a final candidate field.
bool modifier_compatibility(const FieldDescriptor& f, const FieldDescriptor& g);

struct ReadWriteSets {
  std::set<std::string> readers;  // method names
  std::set<std::string> writers;

  bool operator==(const ReadWriteSets&) const = default;
};

/// Methods that read (write) `field` directly or through a chain of self
/// calls. Throws Error(kUnknownField) if `c` declares no such field.
ReadWriteSets field_read_writes(std::string_view field, const ClassDescriptor& c, const CallGraph& graph);

struct FieldConfig {
  double fw = 0.5;
  double ft = 0.5;
};

struct FieldPair {
  std::string query_field;
  std::string candidate_field;
  double score = 0.0;
};

/// σ: a one-to-one map from query fields to candidate fields.
struct FieldMap {
  std::vector<FieldPair> pairs;  // query field declaration order
  FieldConfig config;
  /// FS over (query fields) x (candidate fields), declaration order.
  ScoreMatrix scores;
  /// Usage component of each FS entry (kForbidden where incompatible).
  ScoreMatrix usage;

  const FieldPair* find(std::string_view query_field) const;
  double aggregate_score() const;
};

FieldMap field_map(const ClassDescriptor& q, const ClassDescriptor& r, const TypeSimilarityMatrix& ts,
                   const EmbeddingFunction& f, const FieldConfig& config = {});

}  // namespace dropin
