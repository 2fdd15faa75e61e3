// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/class_index.hpp"

#include <algorithm>
#include <numeric>

#include "binary_io.hpp"
#include "dropin/corpus.hpp"
#include "dropin/error.hpp"
#include "dropin/tokenizer.hpp"

namespace dropin {

namespace {
constexpr std::uint32_t kIndexVersion = 1;
}

void ClassIndex::add(std::string name, std::span<const float> v) {
  if (static_cast<int>(v.size()) != dimension_)
    throw Error(ErrorKind::kDimensionMismatch, "vector for '" + name + "' has " + std::to_string(v.size()) +
                                                   " components, index expects " + std::to_string(dimension_));
  names_.push_back(std::move(name));
  data_.insert(data_.end(), v.begin(), v.end());
}

std::span<const float> ClassIndex::vector(std::size_t i) const {
  return {data_.data() + i * static_cast<std::size_t>(dimension_), static_cast<std::size_t>(dimension_)};
}

std::optional<std::size_t> ClassIndex::find(std::string_view name) const {
  std::optional<std::size_t> simple;
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
    if (simple_name_of(names_[i]) == simple_name_of(name) && (!simple || names_[i] < names_[*simple])) simple = i;
  }
  return simple;
}

std::vector<IndexHit> ClassIndex::lookup(std::span<const float> query, std::size_t k) const {
  if (static_cast<int>(query.size()) != dimension_)
    throw Error(ErrorKind::kDimensionMismatch, "query vector has " + std::to_string(query.size()) +
                                                   " components, index expects " + std::to_string(dimension_));
  std::vector<double> scores(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) scores[i] = cosine(query, vector(i));
  std::vector<std::size_t> order(names_.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t n = std::min(k, order.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(n), order.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (scores[a] != scores[b]) return scores[a] > scores[b];
                      return names_[a] < names_[b];
                    });
  std::vector<IndexHit> hits;
  hits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) hits.push_back({names_[order[i]], scores[order[i]]});
  return hits;
}

std::string ClassIndex::serialize() const {
  detail::ByteWriter w;
  w.bytes("CFIX");
  w.u32(kIndexVersion);
  w.u32(static_cast<std::uint32_t>(dimension_));
  w.u32(static_cast<std::uint32_t>(names_.size()));
  for (std::size_t i = 0; i < names_.size(); ++i) {
    w.str(names_[i]);
    for (float x : vector(i)) w.f32(x);
  }
  return w.take();
}

ClassIndex ClassIndex::deserialize(std::string_view bytes) {
  detail::ByteReader r(bytes, "index");
  r.magic("CFIX");
  const std::uint32_t version = r.u32();
  if (version != kIndexVersion)
    throw Error(ErrorKind::kVersionMismatch, "index file version " + std::to_string(version) + " is not supported");
  const auto d = r.u32();
  if (d == 0) throw MalformedInput(r.offset() - 4, "index dimension is zero");
  ClassIndex idx(static_cast<int>(d));
  const auto count = r.u32();
  std::vector<float> v(d);
  for (std::uint32_t i = 0; i < count; ++i) {
    std::string name = r.str();
    r.require(std::size_t(d) * 4);
    for (auto& x : v) x = r.f32();
    idx.add(std::move(name), v);
  }
  r.expect_end();
  return idx;
}

ClassIndex index_build(std::span<const ClassDescriptor> corpus, const EmbeddingFunction& f) {
  ClassIndex idx(f.dimension());
  for (const auto& c : corpus) idx.add(c.qualified_name, f.embed_bag(class_tokens(c)));
  return idx;
}

}  // namespace dropin
