// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "dropin/error.hpp"
#include "dropin/tokenizer.hpp"
#include "dropin/typesim.hpp"

namespace dropin {

MethodConfig EngineConfig::method_config() const {
  MethodConfig m;
  m.mw = mw;
  m.mt = mt;
  m.inline_depth = inline_depth;
  m.include_own_name = include_own_name;
  m.include_constructors = include_constructors;
  m.strict_static = strict_static;
  m.strict_return = strict_return;
  return m;
}

void validate(const EngineConfig& c) {
  auto in = [](double x, double lo, double hi) { return std::isfinite(x) && x >= lo && x <= hi; };
  auto bad = [](const std::string& what) { throw Error(ErrorKind::kInvalidConfig, what); };
  if (!in(c.tt, -1, 1)) bad("tt must lie in [-1, 1]");
  if (!in(c.ft, -1, 1)) bad("ft must lie in [-1, 1]");
  if (!in(c.mt, -1, 1)) bad("mt must lie in [-1, 1]");
  if (!in(c.fw, 0, 1)) bad("fw must lie in [0, 1]");
  if (!in(c.mw, 0, 1)) bad("mw must lie in [0, 1]");
  if (c.inline_depth <= 0) bad("inline depth must be positive");
  if (c.candidates == 0) bad("candidate count must be positive");
  if (c.top == 0) bad("top must be positive");
  if (c.inheritance_depth < 0) bad("inheritance depth must be non-negative");
  if (c.jobs == 0) bad("jobs must be positive");
}

std::vector<RankedResult> rank_results(std::vector<RankedResult> results) {
  std::stable_sort(results.begin(), results.end(), [](const RankedResult& a, const RankedResult& b) {
    if (a.mapped_method_count != b.mapped_method_count) return a.mapped_method_count > b.mapped_method_count;
    if (a.aggregate_method_score != b.aggregate_method_score)
      return a.aggregate_method_score > b.aggregate_method_score;
    if (a.mapped_field_count != b.mapped_field_count) return a.mapped_field_count > b.mapped_field_count;
    if (a.aggregate_field_score != b.aggregate_field_score) return a.aggregate_field_score > b.aggregate_field_score;
    return a.candidate < b.candidate;
  });
  for (std::size_t i = 0; i < results.size(); ++i) results[i].final_rank = i + 1;
  return results;
}

RankedResult evaluate_candidate(const ClassDescriptor& q, const ClassDescriptor& r, const ClassIndex& index,
                                const ClassLookup& corpus, const EmbeddingFunction& f, const EngineConfig& config) {
  const TypeSimilarityMatrix ts = type_similarity_matrix(q, r, index, f, config.tt, &corpus);
  RankedResult out;
  out.candidate = r.qualified_name;
  out.sigma = field_map(q, r, ts, f, config.field_config());
  out.alpha = method_map(q, r, out.sigma, ts, f, config.method_config());
  out.mapped_method_count = out.alpha.mapped_count();
  out.aggregate_method_score = out.alpha.aggregate_score();
  out.mapped_field_count = out.sigma.pairs.size();
  out.aggregate_field_score = out.sigma.aggregate_score();
  out.ts_entries = ts.non_sentinel_count();
  return out;
}

QueryResult query(const ClassDescriptor& q, const ClassIndex& index, const Corpus& corpus, const EmbeddingFunction& f,
                  const EngineConfig& config) {
  validate(config);
  if (index.empty()) throw Error(ErrorKind::kEmptyIndex, "the class index is empty");
  if (const auto v = validate_descriptor(q); !v.empty())
    throw Error(ErrorKind::kInvalidQuery, q.qualified_name + ": " + v.front().element + ": " + v.front().message);

  QueryResult out;
  out.query = q.qualified_name;
  out.config = config;

  const ClassDescriptor fq = flatten_inheritance(q, corpus, config.inheritance_depth);
  const auto hits = index.lookup(f.embed_bag(class_tokens(q)), config.candidates);

  std::vector<std::optional<RankedResult>> slots(hits.size());
  std::vector<std::string> failures(hits.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next.fetch_add(1); i < hits.size(); i = next.fetch_add(1)) {
      try {
        const ClassDescriptor* r = corpus.find(hits[i].name);
        if (r == nullptr || r->qualified_name != hits[i].name)
          throw Error(ErrorKind::kNotFound, "class is in the index but not in the corpus");
        RankedResult res =
            evaluate_candidate(fq, flatten_inheritance(*r, corpus, config.inheritance_depth), index, corpus, f, config);
        res.embedding_rank = i + 1;
        res.embedding_score = hits[i].score;
        slots[i] = std::move(res);
      } catch (const std::exception& e) {
        failures[i] = hits[i].name + ": skipped: " + e.what();
      }
    }
  };
  const unsigned workers = std::min<std::size_t>(config.jobs, std::max<std::size_t>(hits.size(), 1));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
  }

  std::vector<RankedResult> found;
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (slots[i]) found.push_back(std::move(*slots[i]));
    if (!failures[i].empty()) out.warnings.push_back(failures[i]);
  }
  out.results = rank_results(std::move(found));
  if (out.results.size() > config.top) out.results.resize(config.top);
  return out;
}

}  // namespace dropin
