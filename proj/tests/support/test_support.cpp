// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "test_support.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dropin/extractor.hpp"

namespace dropin::testing {

namespace fs = std::filesystem;

fs::path fixture_dir() { return fs::path(DROPIN_FIXTURE_DIR); }

fs::path fixture_path(const std::string& relative) { return fixture_dir() / relative; }

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<ClassDescriptor> parse_java(const std::string& source, const std::string& locator) {
  auto r = parse_source(source, locator);
  if (r.error) throw std::runtime_error(r.error->to_string());
  return std::move(r.classes);
}

std::vector<ClassDescriptor> load_java_dir(const fs::path& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".java") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<ClassDescriptor> out;
  for (const auto& f : files) {
    auto classes = parse_java(read_file(f), f.filename().string());
    for (auto& c : classes) out.push_back(std::move(c));
  }
  return out;
}

const ClassDescriptor& by_name(const std::vector<ClassDescriptor>& classes, const std::string& qualified) {
  for (const auto& c : classes)
    if (c.qualified_name == qualified) return c;
  throw std::runtime_error("no class " + qualified);
}

namespace {

constexpr const char* kNouns[] = {
    "account", "anchor", "badge",   "basket",  "beacon", "bridge",  "bucket",  "budget", "cargo",  "cell",   "channel",
    "chapter", "circle", "cluster", "column",  "comet",  "crate",   "credit",  "cursor", "device", "domain", "engine",
    "factor",  "fiber",  "filter",  "flag",    "fleet",  "forest",  "frame",   "garden", "gate",   "glyph",  "grain",
    "harbor",  "helmet", "island",  "journal", "kernel", "ladder",  "lantern", "ledger", "lever",  "marble", "meadow",
    "mirror",  "module", "needle",  "orbit",   "packet", "palette", "parcel",  "pebble", "pillar", "planet", "pocket",
    "portal",  "prism",  "quota",   "radar",   "ribbon", "rocket",  "saddle",  "sensor", "shard",  "signal", "socket",
    "spindle", "spring", "stencil", "summit",  "tablet", "ticket",  "timber",  "token",  "tower",  "tunnel", "valve",
    "vessel",  "wagon",  "widget",  "yard"};
constexpr const char* kVerbs[] = {"apply", "attach", "bind",    "build",  "check", "clear",   "collect", "compute",
                                  "count", "drain",  "emit",    "fetch",  "fill",  "flush",   "gather",  "grow",
                                  "load",  "lock",   "mark",    "merge",  "move",  "pack",    "parse",   "probe",
                                  "push",  "read",   "refresh", "render", "reset", "resolve", "rotate",  "scan",
                                  "seal",  "shift",  "sort",    "split",  "store", "sync",    "toggle",  "trace"};
constexpr const char* kAdjectives[] = {"amber", "brisk", "calm",  "dense", "eager",  "fuzzy", "grand", "hollow",
                                       "ivory", "jolly", "keen",  "lucid", "mellow", "noble", "olive", "plain",
                                       "quiet", "rapid", "sharp", "tidy",  "vivid",  "wide",  "young", "zesty"};
constexpr const char* kPackages[] = {"gen.alpha", "gen.beta", "gen.gamma", "gen.delta", "gen.epsilon"};
constexpr const char* kTypes[] = {"int", "long", "double", "boolean", "String", "Object", "int[]"};

template <typename T, std::size_t N>
const char* pick(std::mt19937_64& rng, const T (&pool)[N]) {
  return pool[rng() % N];
}

std::string cap(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

struct GenField {
  std::string name;
  std::string type;
};

std::string zero_of(const std::string& type) {
  if (type == "boolean") return "false";
  if (type == "int" || type == "long") return "0";
  if (type == "double") return "0.0";
  return "null";
}

std::string generate_class(std::mt19937_64& rng, const std::string& simple, const std::string& pkg) {
  std::ostringstream out;
  out << "package " << pkg << ";\n\n";
  out << "public class " << simple << " {\n";

  std::vector<GenField> fields;
  std::set<std::string> used;
  const std::size_t nfields = 2 + rng() % 3;
  while (fields.size() < nfields) {
    std::string name = std::string(pick(rng, kNouns)) + cap(pick(rng, kNouns));
    if (!used.insert(name).second) continue;
    fields.push_back({name, pick(rng, kTypes)});
  }
  for (const auto& f : fields) out << "  private " << f.type << " " << f.name << ";\n";
  out << "\n  public " << simple << "() {\n";
  out << "    " << fields[0].name << " = " << zero_of(fields[0].type) << ";\n  }\n";

  std::vector<std::string> getters;  // zero-argument methods later bodies may call
  std::size_t made = 0;
  const std::size_t nmethods = 3 + rng() % 4;
  while (made < nmethods) {
    std::string name = std::string(pick(rng, kVerbs)) + cap(pick(rng, kNouns));
    if (!used.insert(name).second) continue;
    const auto& f = fields[rng() % fields.size()];
    const auto& g = fields[rng() % fields.size()];
    const std::string p = std::string(pick(rng, kNouns)) + cap(pick(rng, kAdjectives));
    const std::string local = std::string(pick(rng, kAdjectives)) + cap(pick(rng, kNouns));
    // Fresh parameter and local names keep every method's token bag unique.
    if (!used.insert(p).second || !used.insert(local).second) continue;
    out << "\n";
    ++made;
    switch (rng() % 4) {
      case 0:
        out << "  public " << f.type << " " << name << "() {\n";
        out << "    " << f.type << " " << local << " = " << f.name << ";\n";
        out << "    return " << local << ";\n  }\n";
        getters.push_back(name);
        break;
      case 1:
        out << "  public void " << name << "(" << f.type << " " << p << ") {\n";
        out << "    " << f.name << " = " << p << ";\n";
        if (!getters.empty()) out << "    " << getters[rng() % getters.size()] << "();\n";
        out << "  }\n";
        break;
      case 2:
        out << "  public boolean " << name << "(" << g.type << " " << p << ", int " << local << "Limit) {\n";
        out << "    " << g.type << " " << local << " = " << g.name << ";\n";
        out << "    if (" << local << "Limit > 0) {\n";
        out << "      " << g.name << " = " << p << ";\n    }\n";
        out << "    return " << local << " == " << p << ";\n  }\n";
        break;
      default:
        out << "  public String " << name << "(long " << p << ") {\n";
        out << "    StringBuilder " << local << " = new StringBuilder();\n";
        out << "    " << local << ".append(" << f.name << ").append(" << p << ");\n";
        if (!getters.empty()) out << "    " << getters[rng() % getters.size()] << "();\n";
        out << "    return " << local << ".toString();\n  }\n";
        break;
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace

std::vector<std::string> synthetic_java_corpus(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<std::string> names;
  std::vector<std::string> out;
  while (out.size() < count) {
    const std::string simple = cap(pick(rng, kAdjectives)) + cap(pick(rng, kNouns));
    if (!names.insert(simple).second) continue;
    out.push_back(generate_class(rng, simple, kPackages[out.size() % std::size(kPackages)]));
  }
  return out;
}

ClusterCorpus two_cluster_corpus(std::size_t sentences, std::size_t words_per_sentence, std::uint64_t seed) {
  ClusterCorpus c;
  c.cluster_a = {"apple", "banana", "cherry", "grape", "lemon", "mango", "peach", "plum", "melon", "kiwi"};
  c.cluster_b = {"socket", "router", "packet", "switch", "cable", "modem", "server", "client", "proxy", "port"};
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < sentences; ++i) {
    const auto& src = i % 2 == 0 ? c.cluster_a : c.cluster_b;
    TokenBag bag;
    for (std::size_t k = 0; k < words_per_sentence; ++k) bag.push_back(src[rng() % src.size()]);
    c.sentences.push_back(std::move(bag));
  }
  return c;
}

namespace {

// Totals are accumulated row-major, the same order matching_score uses, so
// dyadic inputs compare exactly.
double best_from(const ScoreMatrix& m, std::size_t row, double acc, std::vector<bool>& used) {
  if (row == m.rows()) return acc;
  double best = best_from(m, row + 1, acc, used);  // leave this row unmatched
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (used[c] || !(m(row, c) > 0.0)) continue;
    used[c] = true;
    best = std::max(best, best_from(m, row + 1, acc + m(row, c), used));
    used[c] = false;
  }
  return best;
}

}  // namespace

double brute_force_assignment(const ScoreMatrix& m) {
  std::vector<bool> used(m.cols(), false);
  return best_from(m, 0, 0.0, used);
}

std::vector<IndexHit> brute_force_lookup(const ClassIndex& index, std::span<const float> query) {
  std::vector<IndexHit> all;
  for (std::size_t i = 0; i < index.size(); ++i) all.push_back({index.name(i), cosine(query, index.vector(i))});
  std::sort(all.begin(), all.end(), [](const IndexHit& a, const IndexHit& b) {
    if (a.score != b.score) return a.score > b.score;
    return a.name < b.name;
  });
  return all;
}

TrainingConfig small_training_config() {
  TrainingConfig c;
  c.dimension = 32;
  c.epochs = 5;
  c.buckets = 1u << 16;
  return c;
}

}  // namespace dropin::testing
