// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <utility>
#include <vector>

#include "dropin/class_index.hpp"
#include "dropin/class_model.hpp"
#include "dropin/corpus.hpp"
#include "dropin/embedding.hpp"

namespace dropin {

/// Whether a value of type `a` can be used where `b` is expected:
/// identity, primitive widening, boxing/unboxing, a declared supertype
/// reachable through `hierarchy` (Object is everyone's supertype), or a
/// type variable on either side facing a reference type. Arrays need equal
/// dimensions and compatible elements. `hierarchy` may be null.
bool type_cast_check(const TypeRef& a, const TypeRef& b, const ClassLookup* hierarchy);

/// Scores for every pair in Types(Q) x Types(R): -1, 1, or an embedding
/// cosine above the threshold.
class TypeSimilarityMatrix {
 public:
  TypeSimilarityMatrix() = default;
  TypeSimilarityMatrix(std::vector<TypeRef> q_types, std::vector<TypeRef> r_types, double tt);

  /// kForbidden for pairs outside the matrix.
  double at(const TypeRef& q, const TypeRef& r) const;
  void set(const TypeRef& q, const TypeRef& r, double score);

  const std::vector<TypeRef>& query_types() const { return q_types_; }
  const std::vector<TypeRef>& candidate_types() const { return r_types_; }
  double threshold() const { return tt_; }
  /// Entries other than kForbidden.
  std::size_t non_sentinel_count() const;

 private:
  std::vector<TypeRef> q_types_;
  std::vector<TypeRef> r_types_;
  double tt_ = 0.8;
  std::map<std::pair<TypeRef, TypeRef>, double> scores_;
};

/// Types(C): the class's own type, then field, parameter and return types in
/// declaration order, without duplicates.
std::vector<TypeRef> class_types(const ClassDescriptor& c);

/// Builds TS for (q, r). A class type missing from `index` is embedded from
/// the split tokens of its simple name.
TypeSimilarityMatrix type_similarity_matrix(const ClassDescriptor& q, const ClassDescriptor& r, const ClassIndex& index,
                                            const EmbeddingFunction& f, double tt,
                                            const ClassLookup* hierarchy = nullptr);

}  // namespace dropin
