// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dropin/class_model.hpp"
#include "dropin/embedding.hpp"

namespace dropin {

struct IndexHit {
  std::string name;
  double score = 0.0;

  bool operator==(const IndexHit&) const = default;
};

/// Class vectors for exact nearest-neighbour lookup. Vectors are held as
/// float32 so an index behaves the same whether built or loaded from disk.
class ClassIndex {
 public:
  explicit ClassIndex(int dimension = 0) : dimension_(dimension) {}

  int dimension() const { return dimension_; }
  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }

  /// Throws Error(kDimensionMismatch) if `v` has the wrong length.
  void add(std::string name, std::span<const float> v);

  const std::string& name(std::size_t i) const { return names_[i]; }
  std::span<const float> vector(std::size_t i) const;

  /// Entry for a qualified name, or for a simple name when no qualified name
  /// matches (the smallest qualified name wins a tie).
  std::optional<std::size_t> find(std::string_view name) const;

  /// Exact top-k by descending cosine, ties by ascending name. Returns
  /// min(k, size()) hits.
  std::vector<IndexHit> lookup(std::span<const float> query, std::size_t k) const;

  /// CFIX bytes.
  std::string serialize() const;
  /// Throws MalformedInput or Error(kVersionMismatch).
  static ClassIndex deserialize(std::string_view bytes);

 private:
  int dimension_;
  std::vector<std::string> names_;
  std::vector<float> data_;
};

/// One entry per class, in corpus order, holding embed_bag(class_tokens(c)).
ClassIndex index_build(std::span<const ClassDescriptor> corpus, const EmbeddingFunction& f);

}  // namespace dropin
