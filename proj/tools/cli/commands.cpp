// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <fnmatch.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "dropin/class_index.hpp"
#include "dropin/corpus.hpp"
#include "dropin/embedding.hpp"
#include "dropin/engine.hpp"
#include "dropin/error.hpp"
#include "dropin/evaluation.hpp"
#include "dropin/extractor.hpp"
#include "dropin/interchange.hpp"
#include "dropin/tokenizer.hpp"
#include "dropin/typesim.hpp"

namespace dropin::cli {
namespace {

namespace fs = std::filesystem;

constexpr const char* kModelFile = "model.cfem";
constexpr const char* kIndexFile = "index.cfix";
constexpr const char* kClassesFile = "classes.jsonl";

std::string default_index_dir() {
  const char* home = std::getenv("CF_HOME");
  return home != nullptr && *home != '\0' ? home : ".dropin";
}

std::string read_bytes(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot read " + p.string());
  std::ostringstream s;
  s << in.rdbuf();
  if (in.bad()) throw Error(ErrorKind::kIo, "error reading " + p.string());
  return std::move(s).str();
}

void write_bytes(const fs::path& p, std::string_view bytes) {
  std::error_code ec;
  if (p.has_parent_path()) fs::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size())))
    throw Error(ErrorKind::kIo, "cannot write " + p.string());
}

bool is_interchange(const fs::path& p) { return p.extension() == ".jsonl"; }

struct Ingested {
  std::vector<ClassDescriptor> classes;
  std::size_t skipped = 0;  // files or records that contributed nothing usable
};

// Adds `c` unless it is invalid or its name is taken.
void admit(ClassDescriptor c, Ingested& into, std::set<std::string>& names, const std::string& where,
           std::ostream& err) {
  if (const auto v = validate_descriptor(c); !v.empty()) {
    err << "warning: " << where << ": " << c.qualified_name << ": " << v.front().message << "\n";
    ++into.skipped;
  } else if (!names.insert(c.qualified_name).second) {
    err << "warning: " << where << ": duplicate class " << c.qualified_name << " skipped\n";
    ++into.skipped;
  } else {
    into.classes.push_back(std::move(c));
  }
}

void ingest_file(const fs::path& p, Ingested& into, std::set<std::string>& names, std::ostream& err) {
  const auto text = read_bytes(p);
  if (is_interchange(p)) {
    try {
      for (auto& c : load_interchange(text)) admit(std::move(c), into, names, p.string(), err);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::kIo) throw;
      err << "warning: " << p.string() << ": " << e.what() << "\n";
      ++into.skipped;
    }
    return;
  }
  auto parsed = parse_source(text, p.string());
  if (parsed.error) {
    err << "warning: " << parsed.error->to_string() << "\n";
    ++into.skipped;
  }
  for (auto& c : parsed.classes) admit(std::move(c), into, names, p.string(), err);
}

// Directories are walked recursively in path order; `glob` filters file
// names there. Explicit files are always read.
Ingested ingest(const std::vector<std::string>& inputs, const std::string& glob, std::ostream& err) {
  Ingested out;
  std::set<std::string> names;
  for (const auto& input : inputs) {
    const fs::path root(input);
    std::error_code ec;
    if (fs::is_directory(root, ec)) {
      std::vector<fs::path> files;
      for (fs::recursive_directory_iterator it(root, ec), end; !ec && it != end; it.increment(ec)) {
        if (it->is_regular_file() && fnmatch(glob.c_str(), it->path().filename().c_str(), 0) == 0)
          files.push_back(it->path());
      }
      if (ec) throw Error(ErrorKind::kIo, "cannot walk " + input + ": " + ec.message());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) ingest_file(f, out, names, err);
    } else if (fs::is_regular_file(root, ec)) {
      ingest_file(root, out, names, err);
    } else {
      throw Error(ErrorKind::kIo, "no such file or directory: " + input);
    }
  }
  return out;
}

std::vector<TokenBag> sentences(std::span<const ClassDescriptor> classes) {
  std::vector<TokenBag> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(class_tokens(c));
  return out;
}

// Everything `query` and `explain` need from an index directory.
struct Loaded {
  EmbeddingModel model;
  ClassIndex index;
  Corpus corpus;
};

Loaded load_index(const fs::path& dir) {
  return {EmbeddingModel::deserialize(read_bytes(dir / kModelFile)),
          ClassIndex::deserialize(read_bytes(dir / kIndexFile)),
          Corpus(load_interchange(read_bytes(dir / kClassesFile)))};
}

// A query is a source file (.java or .jsonl) or the name of an indexed
// class. `pick` selects among several classes in one file.
ClassDescriptor resolve_query(const std::string& spec, const std::string& pick, const Corpus& corpus,
                              std::ostream& err) {
  const fs::path p(spec);
  std::error_code ec;
  if (fs::is_regular_file(p, ec)) {
    Ingested in;
    std::set<std::string> names;
    ingest_file(p, in, names, err);
    if (in.classes.empty()) throw Error(ErrorKind::kInvalidQuery, "no usable class in " + spec);
    if (pick.empty()) return in.classes.front();
    for (auto& c : in.classes)
      if (c.qualified_name == pick || c.simple_name == pick) return c;
    throw Error(ErrorKind::kNotFound, "class " + pick + " not found in " + spec);
  }
  if (p.extension() == ".java" || is_interchange(p)) throw Error(ErrorKind::kIo, "cannot read " + spec);
  if (const auto* c = corpus.find(spec)) return *c;
  throw Error(ErrorKind::kNotFound, "class " + spec + " is not in the index");
}

void add_training_flags(CLI::App& cmd, TrainingConfig& t) {
  cmd.add_option("--dim", t.dimension, "Embedding dimension")->check(CLI::PositiveNumber);
  cmd.add_option("--window", t.window, "Context window radius")->check(CLI::PositiveNumber);
  cmd.add_option("--negatives", t.negatives, "Negative samples per target")->check(CLI::NonNegativeNumber);
  cmd.add_option("--epochs", t.epochs, "Training epochs")->check(CLI::PositiveNumber);
  cmd.add_option("--lr", t.learning_rate, "Initial learning rate, decayed linearly")->check(CLI::PositiveNumber);
  cmd.add_option("--min-count", t.min_count, "Drop tokens seen fewer times")->check(CLI::PositiveNumber);
  cmd.add_option("--buckets", t.buckets, "Subword hash buckets")->check(CLI::PositiveNumber);
  cmd.add_option("--seed", t.seed, "Training seed");
  cmd.add_option("--jobs", t.threads, "Training workers; above 1 results are not bit-reproducible")
      ->check(CLI::PositiveNumber);
}

void add_engine_flags(CLI::App& cmd, EngineConfig& e) {
  const auto unit = CLI::Range(-1.0, 1.0);
  const auto weight = CLI::Range(0.0, 1.0);
  cmd.add_option("--tt", e.tt, "Type similarity threshold")->check(unit);
  cmd.add_option("--ft", e.ft, "Field mapping threshold")->check(unit);
  cmd.add_option("--mt", e.mt, "Method mapping threshold")->check(unit);
  cmd.add_option("--fw", e.fw, "Usage weight in field scores")->check(weight);
  cmd.add_option("--mw", e.mw, "Embedding weight in method scores")->check(weight);
  cmd.add_option("--inline-depth", e.inline_depth, "Self-call inlining depth")->check(CLI::NonNegativeNumber);
  cmd.add_option("--candidates", e.candidates, "Prefilter size K")->check(CLI::PositiveNumber);
  cmd.add_option("--top", e.top, "Results to report")->check(CLI::PositiveNumber);
  cmd.add_option("--jobs", e.jobs, "Mapping workers")->check(CLI::PositiveNumber);
  cmd.add_flag("--include-constructors", e.include_constructors, "Map constructors too [off]");
  cmd.add_flag("--strict-static", e.strict_static, "Forbid static/instance method pairs [off]");
  cmd.add_flag("--strict-return", e.strict_return, "Forbid pairs with incompatible return types [off]");
  cmd.add_flag("--include-own-name", e.include_own_name, "Keep a method's own name in its tokens [off]");
}

std::string fixed(double v, int digits = 3) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << v;
  return s.str();
}

std::string percent(double v) { return fixed(100.0 * v, 1) + "%"; }

// Column-aligned text table; the first row is the header.
void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    width.resize(std::max(width.size(), r.size()));
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      line += r[i];
      if (i + 1 < r.size()) line += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void print_results(std::ostream& out, const QueryResult& r) {
  out << "query " << r.query << "\n";
  std::vector<std::vector<std::string>> rows = {
      {"rank", "class", "methods", "method score", "fields", "field score", "ER", "cosine"}};
  for (const auto& x : r.results) {
    rows.push_back({std::to_string(x.final_rank), x.candidate,
                    std::to_string(x.mapped_method_count) + "/" + std::to_string(x.alpha.entries.size()),
                    fixed(x.aggregate_method_score),
                    std::to_string(x.mapped_field_count) + "/" + std::to_string(x.sigma.scores.rows()),
                    fixed(x.aggregate_field_score), std::to_string(x.embedding_rank), fixed(x.embedding_score)});
  }
  print_table(out, rows);
  for (const auto& w : r.warnings) out << "warning: " << w << "\n";
}

std::string pairs_text(const Matching& m) {
  std::string s;
  for (const auto& [a, b] : m) s += (s.empty() ? "" : " ") + std::to_string(a) + ":" + std::to_string(b);
  return s.empty() ? "-" : s;
}

std::string score_text(double v) { return v == kForbidden ? "forbidden" : fixed(v); }

void print_explanation(std::ostream& out, const ClassDescriptor& fq, const ClassDescriptor& fr, const RankedResult& x,
                       const TypeSimilarityMatrix& ts, const EngineConfig& cfg) {
  out << "query " << fq.qualified_name << "\ncandidate " << fr.qualified_name << "\n";
  if (x.final_rank != 0)
    out << "rank " << x.final_rank << ", ER " << x.embedding_rank << ", cosine " << fixed(x.embedding_score) << "\n";
  else
    out << "outside the prefilter; mapped directly\n";
  out << "type similarity: " << ts.non_sentinel_count() << " of "
      << ts.query_types().size() * ts.candidate_types().size() << " entries above -1 (tt " << cfg.tt << ")\n";

  out << "\nfields (fw " << cfg.fw << ", ft " << cfg.ft << ")\n";
  std::vector<std::vector<std::string>> rows = {{"query", "candidate", "FS", "usage", "type"}};
  for (std::size_t i = 0; i < fq.fields.size(); ++i)
    for (std::size_t j = 0; j < fr.fields.size(); ++j) {
      if (i >= x.sigma.scores.rows() || j >= x.sigma.scores.cols()) continue;
      const auto* chosen = x.sigma.find(fq.fields[i].name);
      const bool hit = chosen != nullptr && chosen->candidate_field == fr.fields[j].name;
      rows.push_back({fq.fields[i].name, fr.fields[j].name + (hit ? " *" : ""), score_text(x.sigma.scores(i, j)),
                      score_text(x.sigma.usage(i, j)), score_text(ts.at(fq.fields[i].type, fr.fields[j].type))});
    }
  print_table(out, rows);

  out << "\nmethods (mw " << cfg.mw << ", mt " << cfg.mt << ")\n";
  rows = {{"query", "mapped to", "MS", "embedding", "parameters", "parameter pairs"}};
  for (const auto& e : x.alpha.entries) {
    rows.push_back({e.query_key, e.candidate_key ? *e.candidate_key : "⊥", score_text(e.score),
                    fixed(e.embedding_score), fixed(e.parameter_score), pairs_text(e.parameter_pairs)});
  }
  print_table(out, rows);
  out << "\nmapped " << x.mapped_method_count << "/" << x.alpha.entries.size() << " methods, " << x.mapped_field_count
      << "/" << fq.fields.size() << " fields\n";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kIo:
      return kIoError;
    case ErrorKind::kInvalidConfig:
      return kBadFlags;
    default:
      return kDomainError;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Find drop-in replacement classes in a Java corpus.", "dropin"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.get_formatter()->column_width(40);

  std::vector<std::string> inputs;
  std::string glob = "*.java";
  std::string index_dir = default_index_dir();
  std::string model_path;
  std::string out_path;
  TrainingConfig training;
  EngineConfig engine;
  std::string query_spec, query_class, candidate, format = "table";
  std::string result_path, ideal_path;

  auto* index_cmd = app.add_subcommand("index", "Parse sources, train embeddings and build a class index");
  index_cmd->add_option("inputs", inputs, "Source directories, .java files or .jsonl interchange files")->required();
  index_cmd->add_option("--out", index_dir, "Index directory (CF_HOME if set)");
  index_cmd->add_option("--glob", glob, "File-name filter inside directories");
  index_cmd->add_option("--model", model_path, "Use this trained model instead of training one");
  add_training_flags(*index_cmd, training);

  auto* train_cmd = app.add_subcommand("train", "Train an embedding model only");
  train_cmd->add_option("inputs", inputs, "Source directories, .java files or .jsonl interchange files")->required();
  train_cmd->add_option("--out", out_path, "Model file to write")->required();
  train_cmd->add_option("--glob", glob, "File-name filter inside directories");
  add_training_flags(*train_cmd, training);

  auto* query_cmd = app.add_subcommand("query", "Rank replacement candidates for a class");
  query_cmd->add_option("query", query_spec, "A .java or .jsonl file, or the name of an indexed class")->required();
  query_cmd->add_option("--class", query_class, "Which class of the query file to use (first by default)");
  query_cmd->add_option("--index", index_dir, "Index directory (CF_HOME if set)");
  query_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  query_cmd->add_option("--output", out_path, "Also write the structured result document here");
  add_engine_flags(*query_cmd, engine);

  auto* eval_cmd = app.add_subcommand("eval", "Score a result document against ideal mappings");
  eval_cmd->add_option("result", result_path, "Structured result document")->required();
  eval_cmd->add_option("ideal", ideal_path, "Ideal mapping file")->required();

  auto* explain_cmd = app.add_subcommand("explain", "Show field and method mappings for one candidate");
  explain_cmd->add_option("query", query_spec, "A .java or .jsonl file, or the name of an indexed class")->required();
  explain_cmd->add_option("--candidate", candidate, "Candidate class name")->required();
  explain_cmd->add_option("--class", query_class, "Which class of the query file to use (first by default)");
  explain_cmd->add_option("--index", index_dir, "Index directory (CF_HOME if set)");
  add_engine_flags(*explain_cmd, engine);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kBadFlags;
  }

  try {
    if (*index_cmd || *train_cmd) {
      auto in = ingest(inputs, glob, err);
      if (in.classes.empty()) throw Error(ErrorKind::kEmptyCorpus, "no classes ingested");
      if (*train_cmd) {
        const auto model = train_model(sentences(in.classes), training);
        write_bytes(out_path, model.serialize());
        out << "trained on " << in.classes.size() << " classes (" << in.skipped << " skipped), vocabulary "
            << model.vocabulary().size() << ", wrote " << out_path << "\n";
        return kOk;
      }
      const auto model = model_path.empty() ? train_model(sentences(in.classes), training)
                                            : EmbeddingModel::deserialize(read_bytes(model_path));
      const auto index = index_build(in.classes, model);
      const fs::path dir(index_dir);
      write_bytes(dir / kModelFile, model.serialize());
      write_bytes(dir / kIndexFile, index.serialize());
      write_bytes(dir / kClassesFile, save_interchange(in.classes));
      out << "indexed " << in.classes.size() << " classes, skipped " << in.skipped << ", wrote " << dir.string()
          << "\n";
      return kOk;
    }

    if (*query_cmd) {
      const auto loaded = load_index(index_dir);
      const auto q = resolve_query(query_spec, query_class, loaded.corpus, err);
      const auto result = query(q, loaded.index, loaded.corpus, loaded.model, engine);
      const auto doc = result_document(result);
      if (!out_path.empty()) write_bytes(out_path, doc);
      if (format == "structured")
        out << doc << (doc.ends_with('\n') ? "" : "\n");
      else
        print_results(out, result);
      return kOk;
    }

    if (*eval_cmd) {
      const auto result = parse_result_document(read_bytes(result_path));
      const auto ideal = load_ideal_mappings(read_bytes(ideal_path));
      std::vector<std::vector<std::string>> rows = {
          {"rank", "candidate", "C1", "C2", "E1", "E2", "E3", "P", "C", "ER"}};
      std::size_t matched = 0;
      for (const auto& x : result.results) {
        const auto* entry = find_ideal(ideal, result.query, x.candidate);
        if (entry == nullptr) continue;
        ++matched;
        const auto b = classify_mapping(x.alpha, *entry).breakdown;
        rows.push_back({std::to_string(x.final_rank), x.candidate, std::to_string(b.count(Category::kC1)),
                        std::to_string(b.count(Category::kC2)), std::to_string(b.count(Category::kE1)),
                        std::to_string(b.count(Category::kE2)), std::to_string(b.count(Category::kE3)),
                        percent(b.precision()), percent(b.correctness()), std::to_string(x.embedding_rank)});
      }
      if (matched == 0) throw Error(ErrorKind::kNotFound, "no ideal mapping covers a result of query " + result.query);
      out << "query " << result.query << "\n";
      print_table(out, rows);
      return kOk;
    }

    // explain
    const auto loaded = load_index(index_dir);
    const auto q = resolve_query(query_spec, query_class, loaded.corpus, err);
    const auto* r = loaded.corpus.find(candidate);
    if (r == nullptr) throw Error(ErrorKind::kNotFound, "class " + candidate + " is not in the index");
    validate(engine);
    const auto fq = flatten_inheritance(q, loaded.corpus, engine.inheritance_depth);
    const auto fr = flatten_inheritance(*r, loaded.corpus, engine.inheritance_depth);
    auto all = engine;
    all.top = std::max<std::size_t>(loaded.index.size(), 1);
    std::optional<RankedResult> found;
    for (auto& x : query(q, loaded.index, loaded.corpus, loaded.model, all).results)
      if (x.candidate == r->qualified_name) found = std::move(x);
    if (!found) found = evaluate_candidate(fq, fr, loaded.index, loaded.corpus, loaded.model, engine);
    const auto ts = type_similarity_matrix(fq, fr, loaded.index, loaded.model, engine.tt, &loaded.corpus);
    print_explanation(out, fq, fr, *found, ts, engine);
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace dropin::cli
