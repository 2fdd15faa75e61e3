// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/engine.hpp"
#include "dropin/error.hpp"
#include "json_codec.hpp"

namespace dropin {

namespace {

using codec::Json;

Json config_json(const EngineConfig& c) {
  return Json{{"tt", c.tt},
              {"ft", c.ft},
              {"mt", c.mt},
              {"fw", c.fw},
              {"mw", c.mw},
              {"inline_depth", c.inline_depth},
              {"candidates", c.candidates},
              {"top", c.top},
              {"inheritance_depth", c.inheritance_depth},
              {"include_constructors", c.include_constructors},
              {"strict_static", c.strict_static},
              {"strict_return", c.strict_return},
              {"include_own_name", c.include_own_name}};
}

EngineConfig config_from(const Json& j) {
  EngineConfig c;
  c.tt = j.at("tt").get<double>();
  c.ft = j.at("ft").get<double>();
  c.mt = j.at("mt").get<double>();
  c.fw = j.at("fw").get<double>();
  c.mw = j.at("mw").get<double>();
  c.inline_depth = j.at("inline_depth").get<int>();
  c.candidates = j.at("candidates").get<std::size_t>();
  c.top = j.at("top").get<std::size_t>();
  c.inheritance_depth = j.at("inheritance_depth").get<int>();
  c.include_constructors = j.at("include_constructors").get<bool>();
  c.strict_static = j.at("strict_static").get<bool>();
  c.strict_return = j.at("strict_return").get<bool>();
  c.include_own_name = j.at("include_own_name").get<bool>();
  return c;
}

Json result_json(const RankedResult& r) {
  Json sigma = Json::array();
  for (const auto& p : r.sigma.pairs)
    sigma.push_back({{"query_field", p.query_field}, {"candidate_field", p.candidate_field}, {"score", p.score}});
  Json alpha = Json::array();
  for (const auto& e : r.alpha.entries) {
    Json params = Json::array();
    for (const auto& [a, b] : e.parameter_pairs) params.push_back(Json::array({a, b}));
    alpha.push_back({{"query_method", e.query_key},
                     {"candidate_method", e.candidate_key ? Json(*e.candidate_key) : Json(nullptr)},
                     {"score", e.score},
                     {"embedding_score", e.embedding_score},
                     {"parameter_score", e.parameter_score},
                     {"parameter_map", std::move(params)}});
  }
  return Json{{"rank", r.final_rank},
              {"candidate", r.candidate},
              {"embedding_rank", r.embedding_rank},
              {"embedding_score", r.embedding_score},
              {"mapped_method_count", r.mapped_method_count},
              {"method_count", r.alpha.entries.size()},
              {"aggregate_method_score", r.aggregate_method_score},
              {"mapped_field_count", r.mapped_field_count},
              {"aggregate_field_score", r.aggregate_field_score},
              {"sigma", std::move(sigma)},
              {"alpha", std::move(alpha)}};
}

RankedResult result_from(const Json& j) {
  RankedResult r;
  r.final_rank = j.at("rank").get<std::size_t>();
  r.candidate = j.at("candidate").get<std::string>();
  r.embedding_rank = j.at("embedding_rank").get<std::size_t>();
  r.embedding_score = j.at("embedding_score").get<double>();
  r.mapped_method_count = j.at("mapped_method_count").get<std::size_t>();
  r.aggregate_method_score = j.at("aggregate_method_score").get<double>();
  r.mapped_field_count = j.at("mapped_field_count").get<std::size_t>();
  r.aggregate_field_score = j.at("aggregate_field_score").get<double>();
  for (const auto& p : j.at("sigma"))
    r.sigma.pairs.push_back({p.at("query_field").get<std::string>(), p.at("candidate_field").get<std::string>(),
                             p.at("score").get<double>()});
  for (const auto& e : j.at("alpha")) {
    MethodMatch m;
    m.query_key = e.at("query_method").get<std::string>();
    if (!e.at("candidate_method").is_null()) m.candidate_key = e.at("candidate_method").get<std::string>();
    m.score = e.at("score").get<double>();
    m.embedding_score = e.at("embedding_score").get<double>();
    m.parameter_score = e.at("parameter_score").get<double>();
    for (const auto& p : e.at("parameter_map"))
      m.parameter_pairs.emplace_back(p.at(0).get<std::size_t>(), p.at(1).get<std::size_t>());
    r.alpha.entries.push_back(std::move(m));
  }
  return r;
}

}  // namespace

std::string result_document(const QueryResult& result) {
  Json results = Json::array();
  for (const auto& r : result.results) results.push_back(result_json(r));
  const Json doc{{"format", "cf-result"},         {"version", 1},
                 {"query", result.query},         {"config", config_json(result.config)},
                 {"results", std::move(results)}, {"warnings", result.warnings}};
  return doc.dump(2, ' ', false, Json::error_handler_t::strict) + "\n";
}

QueryResult parse_result_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MalformedInput(e.byte > 0 ? e.byte - 1 : 0, "result document is not valid JSON");
  }
  try {
    if (doc.at("format") != "cf-result") throw MalformedInput(0, "not a cf-result document");
    if (doc.at("version") != 1)
      throw Error(ErrorKind::kVersionMismatch, "result document version " + doc.at("version").dump());
    QueryResult out;
    out.query = doc.at("query").get<std::string>();
    out.config = config_from(doc.at("config"));
    for (const auto& r : doc.at("results")) out.results.push_back(result_from(r));
    out.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return out;
  } catch (const Json::exception& e) {
    throw MalformedInput(0, std::string("result document: ") + e.what());
  }
}

}  // namespace dropin
