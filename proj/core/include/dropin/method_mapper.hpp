// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/assignment.hpp"
#include "dropin/class_model.hpp"
#include "dropin/embedding.hpp"
#include "dropin/field_mapper.hpp"
#include "dropin/typesim.hpp"

namespace dropin {

/// Renames every σ target field g of `r` to its query-side name f, in the
/// field table, in access sets, and in body tokens not shadowed by a local
/// or parameter. Targets missing from `r` are ignored, so a second
/// application is a no-op. Throws Error(kRenameCollision) when f already
/// names another field of `r` that is not itself renamed.
ClassDescriptor rewrite_fields(const ClassDescriptor& r, const FieldMap& sigma);

struct ParameterScore {
  Matching pairs;  // (query param, candidate param)
  double score = 1.0;
  ScoreMatrix ps;
};

/// PS from TS over parameter types, matched optimally. The score is 1 when
/// neither method has parameters and otherwise
/// 2 * sum((PS + 1) / 2 over matched pairs) / max(p, q) - 1.
ParameterScore parameter_map_score(const MethodDescriptor& mi, const MethodDescriptor& mj,
                                   const TypeSimilarityMatrix& ts);

struct MethodConfig {
  double mw = 0.5;
  double mt = 0.5;
  int inline_depth = 5;
  bool include_own_name = false;
  bool include_constructors = false;
  /// Forbid pairing static with instance methods.
  bool strict_static = false;
  /// Forbid pairs whose return types have no TS entry.
  bool strict_return = false;
};

struct MethodMatch {
  std::string query_key;
  /// nullopt is ⊥.
  std::optional<std::string> candidate_key;
  /// MS of the chosen pair, or of the best rejected pair for ⊥ (kForbidden
  /// when every pair was forbidden).
  double score = kForbidden;
  double embedding_score = 0.0;
  double parameter_score = 0.0;
  Matching parameter_pairs;
};

/// α with the matrices it was chosen from.
struct MethodMap {
  std::vector<MethodMatch> entries;  // query public-method order
  MethodConfig config;
  std::vector<std::string> candidate_keys;  // columns of the matrices
  ScoreMatrix ms;
  ScoreMatrix embedding;
  ScoreMatrix parameter;

  const MethodMatch* find(std::string_view query_key) const;
  std::size_t mapped_count() const;
  /// Sum of MS over non-⊥ entries.
  double aggregate_score() const;
};

MethodMap method_map(const ClassDescriptor& q, const ClassDescriptor& r, const FieldMap& sigma,
                     const TypeSimilarityMatrix& ts, const EmbeddingFunction& f, const MethodConfig& config = {});

}  // namespace dropin
