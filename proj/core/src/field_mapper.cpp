// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/field_mapper.hpp"

#include <map>

#include "dropin/error.hpp"
#include "dropin/tokenizer.hpp"

namespace dropin {

namespace {

// Names of methods from which some method in `seeds` is reachable.
std::set<std::string> close_over_callers(const ClassDescriptor& c, const CallGraph& graph,
                                         const std::set<std::string>& seed_keys) {
  std::set<std::string> reached = seed_keys;
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& [caller, callee] : graph.edges)
      if (reached.contains(callee) && reached.insert(caller).second) grew = true;
  }
  std::set<std::string> names;
  for (const auto& m : c.methods)
    if (reached.contains(method_key(m))) names.insert(m.name);
  return names;
}

double usage_similarity(const std::set<std::string>& a, const std::set<std::string>& b, const EmbeddingFunction& f) {
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;
  auto bag = [](const std::set<std::string>& names) {
    TokenBag out;
    for (const auto& n : names)
      for (auto& w : split_identifier(n)) out.push_back(std::move(w));
    return out;
  };
  return cosine(f.embed_bag(bag(a)), f.embed_bag(bag(b)));
}

}  // namespace

bool modifier_compatibility(const FieldDescriptor& f, const FieldDescriptor& g) {
  if (f.is_static != g.is_static) return false;
  return !(!f.is_final && g.is_final);
}

ReadWriteSets field_read_writes(std::string_view field, const ClassDescriptor& c, const CallGraph& graph) {
  if (find_field(c, field) == nullptr)
    throw Error(ErrorKind::kUnknownField, c.qualified_name + " has no field '" + std::string(field) + "'");
  std::set<std::string> read_keys, write_keys;
  for (const auto& m : c.methods) {
    if (m.fields_read.contains(std::string(field))) read_keys.insert(method_key(m));
    if (m.fields_written.contains(std::string(field))) write_keys.insert(method_key(m));
  }
  return {close_over_callers(c, graph, read_keys), close_over_callers(c, graph, write_keys)};
}

const FieldPair* FieldMap::find(std::string_view query_field) const {
  for (const auto& p : pairs)
    if (p.query_field == query_field) return &p;
  return nullptr;
}

double FieldMap::aggregate_score() const {
  double s = 0.0;
  for (const auto& p : pairs) s += p.score;
  return s;
}

FieldMap field_map(const ClassDescriptor& q, const ClassDescriptor& r, const TypeSimilarityMatrix& ts,
                   const EmbeddingFunction& f, const FieldConfig& config) {
  FieldMap out;
  out.config = config;
  out.scores = ScoreMatrix(q.fields.size(), r.fields.size());
  out.usage = ScoreMatrix(q.fields.size(), r.fields.size());
  const CallGraph gq = build_call_graph(q), gr = build_call_graph(r);
  std::vector<ReadWriteSets> rq, rr;
  for (const auto& fd : q.fields) rq.push_back(field_read_writes(fd.name, q, gq));
  for (const auto& gd : r.fields) rr.push_back(field_read_writes(gd.name, r, gr));

  for (std::size_t i = 0; i < q.fields.size(); ++i) {
    for (std::size_t j = 0; j < r.fields.size(); ++j) {
      if (!modifier_compatibility(q.fields[i], r.fields[j])) continue;
      const double r_score = usage_similarity(rq[i].readers, rr[j].readers, f);
      const double w_score = usage_similarity(rq[i].writers, rr[j].writers, f);
      const double escore = (r_score + w_score) / 2.0;
      out.usage(i, j) = escore;
      out.scores(i, j) = config.fw * escore + (1.0 - config.fw) * ts.at(q.fields[i].type, r.fields[j].type);
    }
  }
  for (const auto& [i, j] : optimize(out.scores)) {
    if (out.scores(i, j) >= config.ft) out.pairs.push_back({q.fields[i].name, r.fields[j].name, out.scores(i, j)});
  }
  return out;
}

}  // namespace dropin
