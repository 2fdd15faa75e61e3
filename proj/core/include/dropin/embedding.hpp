// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Subword CBOW token embeddings. A token's vector is the mean of the vectors
// of its character n-grams (with `<` `>` boundary markers) plus its own word
// vector when the token was seen in training, so every token, known or not,
// has an embedding.

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "dropin/tokenizer.hpp"

namespace dropin {

using Vector = std::vector<float>;

/// Cosine similarity computed in double precision and clamped to [-1, 1].
/// Returns 0 when either vector is all zeros. Throws
/// Error(kDimensionMismatch) on unequal lengths.
double cosine(std::span<const float> a, std::span<const float> b);

/// The embedding F used by every scoring stage. Implementations must be
/// immutable after construction and safe to call concurrently.
class EmbeddingFunction {
 public:
  virtual ~EmbeddingFunction() = default;
  virtual int dimension() const = 0;
  virtual Vector embed_token(std::string_view token) const = 0;

  /// Multiset mean of embed_token over `bag`; the zero vector when empty.
  Vector embed_bag(const TokenBag& bag) const;
};

struct TrainingConfig {
  int dimension = 150;
  int window = 5;
  int negatives = 5;
  int epochs = 10;
  double learning_rate = 0.05;
  int min_count = 1;
  int n_min = 3;
  int n_max = 6;
  std::uint32_t buckets = 1u << 21;
  std::uint64_t seed = 42;
  /// Workers for training. 1 is deterministic; more trains lock-free in
  /// parallel and gives up bitwise reproducibility.
  int threads = 1;

  bool operator==(const TrainingConfig&) const = default;
};

/// Throws Error(kInvalidConfig) describing the first out-of-range field.
void validate(const TrainingConfig& config);

class EmbeddingModel final : public EmbeddingFunction {
 public:
  EmbeddingModel() = default;

  int dimension() const override { return config_.dimension; }
  Vector embed_token(std::string_view token) const override;

  const TrainingConfig& config() const { return config_; }
  std::span<const std::string> vocabulary() const { return words_; }
  std::uint64_t count(std::string_view word) const;
  bool contains(std::string_view word) const { return word_ids_.contains(std::string(word)); }

  /// Bucket ids of the n-grams of `<token>`, in extraction order.
  std::vector<std::uint32_t> ngram_buckets(std::string_view token) const;

  /// CFEM bytes; identical models serialize to identical bytes.
  std::string serialize() const;
  /// Throws MalformedInput or Error(kVersionMismatch).
  static EmbeddingModel deserialize(std::string_view bytes);

  friend EmbeddingModel train_model(const std::vector<TokenBag>& sentences, const TrainingConfig& config);

 private:
  // Row of bucket `b`: the trained row when present, else its deterministic
  // initial value (buckets no vocabulary word touches are never stored).
  void add_bucket_row(std::uint32_t bucket, std::vector<double>& acc) const;
  void index_words();

  TrainingConfig config_;
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::unordered_map<std::string, std::uint32_t> word_ids_;
  std::vector<float> word_rows_;  // words_.size() x d
  std::unordered_map<std::uint32_t, std::vector<float>> bucket_rows_;
};

/// Trains on one sentence per token bag. Tokens seen fewer than
/// `min_count` times are dropped from the vocabulary. Throws
/// Error(kEmptyCorpus) when no sentence contains a token and
/// Error(kInvalidConfig) for a bad config.
EmbeddingModel train_model(const std::vector<TokenBag>& sentences, const TrainingConfig& config = {});

/// 32-bit FNV-1a, the n-gram bucket hash.
std::uint32_t fnv1a(std::string_view bytes);

}  // namespace dropin
