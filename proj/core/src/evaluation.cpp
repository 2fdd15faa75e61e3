// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/evaluation.hpp"

#include <numeric>
#include <set>

#include "dropin/error.hpp"
#include "json_codec.hpp"

namespace dropin {

std::string_view to_string(Category c) {
  switch (c) {
    case Category::kC1:
      return "C1";
    case Category::kC2:
      return "C2";
    case Category::kE1:
      return "E1";
    case Category::kE2:
      return "E2";
    case Category::kE3:
      return "E3";
  }
  return "?";
}

std::size_t QualityBreakdown::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

double QualityBreakdown::precision() const {
  const std::size_t t = total();
  if (t == 0) return 0.0;
  return static_cast<double>(count(Category::kC1) + count(Category::kE1) + count(Category::kE3)) / double(t);
}

double QualityBreakdown::correctness() const {
  const std::size_t t = total();
  if (t == 0) return 0.0;
  return static_cast<double>(count(Category::kC1) + count(Category::kC2)) / double(t);
}

Category classify(const std::optional<std::string>& ideal, const std::optional<std::string>& actual) {
  if (ideal) {
    if (!actual) return Category::kE3;
    return *actual == *ideal ? Category::kC1 : Category::kE1;
  }
  return actual ? Category::kE2 : Category::kC2;
}

Classification classify_mapping(const MethodMap& alpha, const IdealEntry& ideal) {
  Classification out;
  std::set<std::string> seen;
  for (const auto& e : alpha.entries) {
    auto it = ideal.methods.find(e.query_key);
    if (it == ideal.methods.end())
      throw Error(ErrorKind::kCoverage,
                  "ideal mapping for " + ideal.query + " -> " + ideal.candidate + " has no entry for " + e.query_key);
    seen.insert(e.query_key);
    const Category c = classify(it->second, e.candidate_key);
    out.methods.emplace_back(e.query_key, c);
    ++out.breakdown.counts[static_cast<std::size_t>(c)];
  }
  for (const auto& [key, target] : ideal.methods)
    if (!seen.contains(key))
      throw Error(ErrorKind::kCoverage, "ideal mapping for " + ideal.query + " -> " + ideal.candidate + " names " +
                                            key + ", which is not a public method of the query");
  return out;
}

RankComparison compare_rankings(const std::vector<RankedResult>& results, std::string_view ground_truth) {
  for (const auto& r : results)
    if (r.candidate == ground_truth) return {r.final_rank, r.embedding_rank};
  throw Error(ErrorKind::kNotFound, "'" + std::string(ground_truth) + "' is not among the results");
}

std::vector<IdealEntry> load_ideal_mappings(std::string_view bytes) {
  using codec::Json;
  std::vector<IdealEntry> out;
  std::set<std::pair<std::string, std::string>> keys;
  bool seen_header = false;
  std::size_t pos = 0, line_no = 0;
  while (pos < bytes.size()) {
    std::size_t end = bytes.find('\n', pos);
    if (end == std::string_view::npos) end = bytes.size();
    std::string_view line = bytes.substr(pos, end - pos);
    const std::size_t start = pos;
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw MalformedInput(start + (e.byte > 0 ? e.byte - 1 : 0), where + "invalid JSON");
    }
    if (!seen_header) {
      if (!j.is_object() || !j.contains("format") || j["format"] != kIdealFormat)
        throw MalformedInput(start, where + "missing cf-ideal header");
      if (!j.contains("version") || j["version"] != kIdealVersion)
        throw Error(ErrorKind::kVersionMismatch, where + "unsupported cf-ideal version");
      seen_header = true;
      continue;
    }
    IdealEntry e;
    try {
      e.query = j.at("query").get<std::string>();
      e.candidate = j.at("candidate").get<std::string>();
      for (const auto& [k, v] : j.at("methods").items()) {
        const auto target = v.get<std::string>();
        if (target == kBottom)
          e.methods.emplace(k, std::nullopt);
        else
          e.methods.emplace(k, target);
      }
    } catch (const Json::exception& ex) {
      throw MalformedInput(start, where + ex.what());
    }
    if (!keys.emplace(e.query, e.candidate).second)
      throw Error(ErrorKind::kMalformed, where + "duplicate entry for " + e.query + " -> " + e.candidate);
    out.push_back(std::move(e));
  }
  return out;
}

std::string save_ideal_mappings(const std::vector<IdealEntry>& entries) {
  using codec::Json;
  std::string out = codec::dump_line(Json{{"format", std::string(kIdealFormat)}, {"version", kIdealVersion}}) + "\n";
  for (const auto& e : entries) {
    Json methods = Json::object();
    for (const auto& [k, v] : e.methods) methods[k] = v ? *v : std::string(kBottom);
    out += codec::dump_line(Json{{"query", e.query}, {"candidate", e.candidate}, {"methods", std::move(methods)}});
    out += "\n";
  }
  return out;
}

const IdealEntry* find_ideal(const std::vector<IdealEntry>& entries, std::string_view query,
                             std::string_view candidate) {
  for (const auto& e : entries)
    if (e.query == query && e.candidate == candidate) return &e;
  return nullptr;
}

}  // namespace dropin
