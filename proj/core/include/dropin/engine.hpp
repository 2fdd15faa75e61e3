// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// End-to-end search: embed the query, prefilter the K nearest classes, map
// fields and methods against each, and rank.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "dropin/class_index.hpp"
#include "dropin/corpus.hpp"
#include "dropin/embedding.hpp"
#include "dropin/field_mapper.hpp"
#include "dropin/method_mapper.hpp"

namespace dropin {

struct EngineConfig {
  double tt = 0.8;
  double ft = 0.5;
  double mt = 0.5;
  double fw = 0.5;
  double mw = 0.5;
  int inline_depth = 5;
  std::size_t candidates = 1000;  // K
  std::size_t top = 10;
  int inheritance_depth = 16;
  bool include_constructors = false;
  bool strict_static = false;
  bool strict_return = false;
  bool include_own_name = false;
  /// Worker threads for per-candidate mapping; results do not depend on it.
  unsigned jobs = 1;

  FieldConfig field_config() const { return {fw, ft}; }
  MethodConfig method_config() const;
};

/// Throws Error(kInvalidConfig) naming the first out-of-range field.
void validate(const EngineConfig& config);

struct RankedResult {
  std::string candidate;
  std::size_t final_rank = 0;      // 1-based
  std::size_t embedding_rank = 0;  // ER, 1-based position in the prefilter list
  double embedding_score = 0.0;
  FieldMap sigma;
  MethodMap alpha;
  std::size_t mapped_method_count = 0;
  double aggregate_method_score = 0.0;
  std::size_t mapped_field_count = 0;
  double aggregate_field_score = 0.0;
  /// Non-sentinel TS entries; kept for explain output.
  std::size_t ts_entries = 0;
};

struct QueryResult {
  std::string query;
  EngineConfig config;
  std::vector<RankedResult> results;
  std::vector<std::string> warnings;  // skipped candidates
};

/// Sorts by (mapped methods, method score, mapped fields, field score)
/// descending, then candidate name ascending, and renumbers final_rank.
std::vector<RankedResult> rank_results(std::vector<RankedResult> results);

/// Maps `q` against one candidate. Both descriptors should already be
/// flattened.
RankedResult evaluate_candidate(const ClassDescriptor& q, const ClassDescriptor& r, const ClassIndex& index,
                                const ClassLookup& corpus, const EmbeddingFunction& f, const EngineConfig& config);

/// Throws Error(kEmptyIndex), Error(kInvalidQuery) for a descriptor that
/// fails validation, or Error(kInvalidConfig).
QueryResult query(const ClassDescriptor& q, const ClassIndex& index, const Corpus& corpus, const EmbeddingFunction& f,
                  const EngineConfig& config = {});

/// The structured result document: deterministic JSON with ⊥ as null.
std::string result_document(const QueryResult& result);
/// Reads a document written by result_document. Matrices are not stored in
/// the document and come back empty. Throws MalformedInput.
QueryResult parse_result_document(std::string_view text);

}  // namespace dropin
