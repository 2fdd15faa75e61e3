// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/method_mapper.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "dropin/call_graph.hpp"
#include "dropin/error.hpp"
#include "dropin/tokenizer.hpp"

namespace dropin {

ClassDescriptor rewrite_fields(const ClassDescriptor& r, const FieldMap& sigma) {
  std::map<std::string, std::string> rename;  // candidate name -> query name
  for (const auto& p : sigma.pairs)
    if (find_field(r, p.candidate_field) != nullptr && p.candidate_field != p.query_field)
      rename.emplace(p.candidate_field, p.query_field);
  if (rename.empty()) return r;

  std::set<std::string> targets;
  for (const auto& [from, to] : rename) targets.insert(to);
  for (const auto& f : r.fields)
    if (targets.contains(f.name) && !rename.contains(f.name))
      throw Error(ErrorKind::kRenameCollision,
                  "renaming onto '" + f.name + "' collides with an existing field of " + r.qualified_name);

  auto mapped = [&](const std::string& name) {
    auto it = rename.find(name);
    return it == rename.end() ? name : it->second;
  };
  ClassDescriptor out = r;
  for (auto& f : out.fields) f.name = mapped(f.name);
  for (auto& m : out.methods) {
    std::set<std::string> shadowing(m.local_variables.begin(), m.local_variables.end());
    for (const auto& p : m.parameters) shadowing.insert(p.name);
    std::set<std::string> read, written;
    for (const auto& f : m.fields_read) read.insert(mapped(f));
    for (const auto& f : m.fields_written) written.insert(mapped(f));
    m.fields_read = std::move(read);
    m.fields_written = std::move(written);
    for (auto& t : m.body_tokens)
      if (!shadowing.contains(t)) t = mapped(t);
  }
  return out;
}

ParameterScore parameter_map_score(const MethodDescriptor& mi, const MethodDescriptor& mj,
                                   const TypeSimilarityMatrix& ts) {
  ParameterScore out;
  const std::size_t p = mi.parameters.size(), q = mj.parameters.size();
  out.ps = ScoreMatrix(p, q);
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t b = 0; b < q; ++b) out.ps(a, b) = ts.at(mi.parameters[a].type, mj.parameters[b].type);
  if (std::max(p, q) == 0) return out;
  out.pairs = optimize(out.ps);
  double sum = 0.0;
  for (const auto& [a, b] : out.pairs) sum += (out.ps(a, b) + 1.0) / 2.0;
  out.score = 2.0 * sum / static_cast<double>(std::max(p, q)) - 1.0;
  return out;
}

const MethodMatch* MethodMap::find(std::string_view query_key) const {
  for (const auto& e : entries)
    if (e.query_key == query_key) return &e;
  return nullptr;
}

std::size_t MethodMap::mapped_count() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const MethodMatch& e) { return e.candidate_key.has_value(); }));
}

double MethodMap::aggregate_score() const {
  double s = 0.0;
  for (const auto& e : entries)
    if (e.candidate_key) s += e.score;
  return s;
}

MethodMap method_map(const ClassDescriptor& q, const ClassDescriptor& r, const FieldMap& sigma,
                     const TypeSimilarityMatrix& ts, const EmbeddingFunction& f, const MethodConfig& config) {
  const ClassDescriptor rr = rewrite_fields(r, sigma);
  const CallGraph gq = build_call_graph(q), gr = build_call_graph(rr);
  const auto qm = public_methods(q, config.include_constructors);
  const auto rm = public_methods(rr, config.include_constructors);
  const MethodTokenOptions opts{config.inline_depth, config.include_own_name};

  MethodMap out;
  out.config = config;
  for (const auto* m : rm) out.candidate_keys.push_back(method_key(*m));
  out.ms = ScoreMatrix(qm.size(), rm.size());
  out.embedding = ScoreMatrix(qm.size(), rm.size(), 0.0);
  out.parameter = ScoreMatrix(qm.size(), rm.size(), 0.0);

  std::vector<Vector> rv;
  for (const auto* m : rm) rv.push_back(f.embed_bag(method_tokens(*m, rr, gr, opts)));

  for (std::size_t i = 0; i < qm.size(); ++i) {
    const MethodDescriptor& mi = *qm[i];
    const Vector qv = f.embed_bag(method_tokens(mi, q, gq, opts));
    MethodMatch best{method_key(mi), std::nullopt, kForbidden, 0.0, 0.0, {}};
    bool have_best = false;
    std::string best_key;
    for (std::size_t j = 0; j < rm.size(); ++j) {
      const MethodDescriptor& mj = *rm[j];
      const double emb = cosine(qv, rv[j]);
      ParameterScore par = parameter_map_score(mi, mj, ts);
      out.embedding(i, j) = emb;
      out.parameter(i, j) = par.score;
      if (config.strict_static && mi.is_static != mj.is_static) continue;
      if (config.strict_return && ts.at(mi.return_type, mj.return_type) == kForbidden) continue;
      const double ms = config.mw * emb + (1.0 - config.mw) * par.score;
      out.ms(i, j) = ms;
      const std::string& key = out.candidate_keys[j];
      const bool better = !have_best || ms > best.score ||
                          (ms == best.score &&
                           (par.score > best.parameter_score || (par.score == best.parameter_score && key < best_key)));
      if (better) {
        have_best = true;
        best_key = key;
        best.score = ms;
        best.embedding_score = emb;
        best.parameter_score = par.score;
        best.parameter_pairs = std::move(par.pairs);
      }
    }
    if (have_best && best.score >= config.mt) {
      best.candidate_key = best_key;
    } else {
      best.parameter_pairs.clear();
    }
    out.entries.push_back(std::move(best));
  }
  return out;
}

}  // namespace dropin
