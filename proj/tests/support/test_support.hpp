// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Shared helpers for unit and acceptance tests: fixture loading, a seeded
// synthetic Java corpus, and brute-force oracles.

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "dropin/assignment.hpp"
#include "dropin/class_index.hpp"
#include "dropin/class_model.hpp"
#include "dropin/embedding.hpp"
#include "dropin/tokenizer.hpp"

namespace dropin::testing {

std::filesystem::path fixture_dir();
std::filesystem::path fixture_path(const std::string& relative);
std::string read_file(const std::filesystem::path& p);

/// Parses one Java source string; fails the calling test on a parse error.
std::vector<ClassDescriptor> parse_java(const std::string& source, const std::string& locator = "test.java");

/// Parses every .java file under `dir` (sorted by path). Throws on a parse
/// error so fixture breakage is loud.
std::vector<ClassDescriptor> load_java_dir(const std::filesystem::path& dir);

/// The class with this qualified name; throws if absent.
const ClassDescriptor& by_name(const std::vector<ClassDescriptor>& classes, const std::string& qualified);

/// Java sources for `count` generated classes. Every class gets a distinct
/// name, its own vocabulary slice, fields, and public methods whose bodies
/// touch fields and call each other.
std::vector<std::string> synthetic_java_corpus(std::size_t count, std::uint64_t seed);

/// Token bags drawn from two disjoint vocabularies, alternating clusters.
struct ClusterCorpus {
  std::vector<TokenBag> sentences;
  std::vector<std::string> cluster_a;
  std::vector<std::string> cluster_b;
};
ClusterCorpus two_cluster_corpus(std::size_t sentences, std::size_t words_per_sentence, std::uint64_t seed);

/// Best total over every partial one-to-one matching that avoids forbidden
/// and non-positive pairs. Exponential; keep matrices tiny.
double brute_force_assignment(const ScoreMatrix& m);

/// All (name, cosine) pairs sorted by descending score then ascending name.
std::vector<IndexHit> brute_force_lookup(const ClassIndex& index, std::span<const float> query);

/// A fixed-size training config for fast tests.
TrainingConfig small_training_config();

}  // namespace dropin::testing
