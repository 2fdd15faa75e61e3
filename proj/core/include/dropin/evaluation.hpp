// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

// Mapping quality against a hand-written ideal mapping.
//
//   ideal g, α g      C1      ideal ⊥, α ⊥    C2
//   ideal g, α h≠g    E1      ideal ⊥, α h    E2
//   ideal g, α ⊥      E3
//
// P = (C1 + E1 + E3) / total is the share of methods that have a
// replacement at all; C = (C1 + C2) / total is the share mapped correctly.

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dropin/engine.hpp"
#include "dropin/method_mapper.hpp"

namespace dropin {

enum class Category { kC1, kC2, kE1, kE2, kE3 };

std::string_view to_string(Category c);

/// Ideal α for one (query, candidate) pair; nullopt is ⊥.
struct IdealEntry {
  std::string query;
  std::string candidate;
  std::map<std::string, std::optional<std::string>> methods;
};

struct QualityBreakdown {
  std::array<std::size_t, 5> counts{};  // indexed by Category

  std::size_t count(Category c) const { return counts[static_cast<std::size_t>(c)]; }
  std::size_t total() const;
  double precision() const;    // P
  double correctness() const;  // C
};

struct Classification {
  std::vector<std::pair<std::string, Category>> methods;  // α entry order
  QualityBreakdown breakdown;
};

Category classify(const std::optional<std::string>& ideal, const std::optional<std::string>& actual);

/// Throws Error(kCoverage) if `ideal` lacks an entry for a method of α or
/// names a method α does not contain.
Classification classify_mapping(const MethodMap& alpha, const IdealEntry& ideal);

struct RankComparison {
  std::size_t final_rank = 0;
  std::size_t embedding_rank = 0;
};

/// Throws Error(kNotFound) when `ground_truth` is not among `results`.
RankComparison compare_rankings(const std::vector<RankedResult>& results, std::string_view ground_truth);

inline constexpr std::string_view kIdealFormat = "cf-ideal";
inline constexpr int kIdealVersion = 1;
/// The ⊥ spelling in ideal-mapping files.
inline constexpr std::string_view kBottom = "⊥";

/// Line-delimited: header {"format":"cf-ideal","version":1}, then one
/// {"query","candidate","methods":{key: key or "⊥"}} record per line.
/// Throws MalformedInput, Error(kVersionMismatch) or, on a repeated
/// (query, candidate) pair, Error(kMalformed).
std::vector<IdealEntry> load_ideal_mappings(std::string_view bytes);
std::string save_ideal_mappings(const std::vector<IdealEntry>& entries);

/// The entry for (query, candidate), matching names exactly; nullptr if
/// absent.
const IdealEntry* find_ideal(const std::vector<IdealEntry>& entries, std::string_view query,
                             std::string_view candidate);

}  // namespace dropin
