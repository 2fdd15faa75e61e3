// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include "dropin/embedding.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "binary_io.hpp"
#include "dropin/error.hpp"

namespace dropin {

namespace {

constexpr std::uint32_t kModelVersion = 1;
constexpr std::size_t kNegativeTableSize = 1'000'000;

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Initial value of input row `row`: uniform in [-1/d, 1/d], a pure function
// of (seed, row) so rows that were never stored can be recreated on demand.
void initial_row(std::uint64_t seed, std::uint64_t row, int d, float* out) {
  std::uint64_t state = seed ^ (row * 0xD1B54A32D192ED03ull);
  splitmix64(state);
  for (int k = 0; k < d; ++k) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    out[k] = static_cast<float>((2.0 * u - 1.0) / d);
  }
}

// Row ids for the initializer: buckets occupy [0, buckets), words follow.
std::uint64_t word_row_id(const TrainingConfig& c, std::uint32_t word) {
  return static_cast<std::uint64_t>(c.buckets) + word;
}

std::vector<std::uint32_t> ngram_buckets_for(std::string_view token, const TrainingConfig& c) {
  const std::string word = "<" + std::string(token) + ">";
  std::vector<std::size_t> starts;  // UTF-8 code point starts
  for (std::size_t i = 0; i < word.size(); ++i)
    if ((static_cast<unsigned char>(word[i]) & 0xC0) != 0x80) starts.push_back(i);
  const std::size_t chars = starts.size();
  starts.push_back(word.size());

  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < chars; ++i) {
    for (int n = c.n_min; n <= c.n_max && i + n <= chars; ++n) {
      if (n == 1 && (i == 0 || i + 1 == chars)) continue;  // lone boundary marker
      const std::string_view gram(word.data() + starts[i], starts[i + n] - starts[i]);
      out.push_back(fnv1a(gram) % c.buckets);
    }
  }
  return out;
}

float relaxed_load(float& x) { return std::atomic_ref<float>(x).load(std::memory_order_relaxed); }
void relaxed_add(float& x, float v) {
  std::atomic_ref<float> r(x);
  r.store(r.load(std::memory_order_relaxed) + v, std::memory_order_relaxed);
}

struct Trainer {
  const TrainingConfig& cfg;
  int d;
  std::vector<float> input;                             // dense rows: words first, then materialized buckets
  std::vector<float> output;                            // words x d, starts at zero
  std::vector<std::vector<std::uint32_t>> word_inputs;  // dense input rows per word
  std::vector<std::uint32_t> negative_table;
  std::vector<std::vector<std::uint32_t>> sentences;
  std::uint64_t total_tokens = 0;
  std::atomic<std::uint64_t> processed{0};

  void train_span(std::size_t first, std::size_t stride, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<float> hidden(d), grad(d);
    std::vector<std::uint32_t> rows;
    const double budget = static_cast<double>(cfg.epochs) * static_cast<double>(total_tokens);
    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
      for (std::size_t s = first; s < sentences.size(); s += stride) {
        const auto& sent = sentences[s];
        for (std::size_t w = 0; w < sent.size(); ++w) {
          const double progress = static_cast<double>(processed.fetch_add(1, std::memory_order_relaxed)) / budget;
          const float lr = static_cast<float>(cfg.learning_rate * std::max(0.0, 1.0 - progress));
          const int boundary = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(cfg.window));
          rows.clear();
          for (int c = -boundary; c <= boundary; ++c) {
            const auto pos = static_cast<std::ptrdiff_t>(w) + c;
            if (c == 0 || pos < 0 || pos >= static_cast<std::ptrdiff_t>(sent.size())) continue;
            const auto& in = word_inputs[sent[pos]];
            rows.insert(rows.end(), in.begin(), in.end());
          }
          if (rows.empty()) continue;
          std::fill(hidden.begin(), hidden.end(), 0.0f);
          for (auto r : rows)
            for (int k = 0; k < d; ++k) hidden[k] += relaxed_load(input[std::size_t(r) * d + k]);
          const float inv = 1.0f / static_cast<float>(rows.size());
          for (auto& h : hidden) h *= inv;

          std::fill(grad.begin(), grad.end(), 0.0f);
          update(sent[w], true, lr, hidden, grad);
          for (int n = 0; n < cfg.negatives; ++n) {
            std::uint32_t neg;
            do neg = negative_table[rng() % negative_table.size()];
            while (neg == sent[w] && !all_same());
            if (neg == sent[w]) break;
            update(neg, false, lr, hidden, grad);
          }
          for (auto r : rows)
            for (int k = 0; k < d; ++k) relaxed_add(input[std::size_t(r) * d + k], grad[k]);
        }
      }
    }
  }

  // A one-word vocabulary has no valid negative.
  bool all_same() const { return word_inputs.size() == 1; }

  void update(std::uint32_t target, bool label, float lr, const std::vector<float>& hidden, std::vector<float>& grad) {
    float* out = &output[std::size_t(target) * d];
    double dot = 0.0;
    for (int k = 0; k < d; ++k) dot += double(relaxed_load(out[k])) * hidden[k];
    const double score = 1.0 / (1.0 + std::exp(-dot));
    const float alpha = lr * static_cast<float>((label ? 1.0 : 0.0) - score);
    for (int k = 0; k < d; ++k) {
      grad[k] += alpha * relaxed_load(out[k]);
      relaxed_add(out[k], alpha * hidden[k]);
    }
  }
};

}  // namespace

std::uint32_t fnv1a(std::string_view bytes) {
  std::uint32_t h = 2166136261u;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 16777619u;
  }
  return h;
}

double cosine(std::span<const float> a, std::span<const float> b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::kDimensionMismatch, "cosine of vectors with " + std::to_string(a.size()) + " and " +
                                                   std::to_string(b.size()) + " components");
  double dot = 0.0, na = 0.0, nb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += double(a[i]) * b[i];
    na += double(a[i]) * a[i];
    nb += double(b[i]) * b[i];
  }
  if (na == 0.0 || nb == 0.0) return 0.0;
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

Vector EmbeddingFunction::embed_bag(const TokenBag& bag) const {
  const int d = dimension();
  std::vector<double> acc(d, 0.0);
  // Equal tokens share one embed_token call.
  std::map<std::string_view, std::size_t> multiplicity;
  for (const auto& t : bag) ++multiplicity[t];
  for (const auto& [token, n] : multiplicity) {
    const Vector v = embed_token(token);
    for (int k = 0; k < d; ++k) acc[k] += double(v[k]) * double(n);
  }
  Vector out(d, 0.0f);
  if (bag.empty()) return out;
  for (int k = 0; k < d; ++k) out[k] = static_cast<float>(acc[k] / double(bag.size()));
  return out;
}

void validate(const TrainingConfig& c) {
  auto bad = [](const std::string& what) { throw Error(ErrorKind::kInvalidConfig, what); };
  if (c.dimension <= 0) bad("dimension must be positive");
  if (c.window <= 0) bad("window must be positive");
  if (c.negatives <= 0) bad("negatives must be positive");
  if (c.epochs <= 0) bad("epochs must be positive");
  if (!(c.learning_rate > 0.0) || !std::isfinite(c.learning_rate)) bad("learning rate must be positive");
  if (c.min_count <= 0) bad("min count must be positive");
  if (c.n_min <= 0 || c.n_max < c.n_min) bad("n-gram range must satisfy 1 <= n_min <= n_max");
  if (c.buckets == 0) bad("bucket count must be positive");
  if (c.threads <= 0) bad("threads must be positive");
}

std::uint64_t EmbeddingModel::count(std::string_view word) const {
  auto it = word_ids_.find(std::string(word));
  return it == word_ids_.end() ? 0 : counts_[it->second];
}

std::vector<std::uint32_t> EmbeddingModel::ngram_buckets(std::string_view token) const {
  return ngram_buckets_for(token, config_);
}

void EmbeddingModel::add_bucket_row(std::uint32_t bucket, std::vector<double>& acc) const {
  const int d = config_.dimension;
  if (auto it = bucket_rows_.find(bucket); it != bucket_rows_.end()) {
    for (int k = 0; k < d; ++k) acc[k] += it->second[k];
    return;
  }
  std::vector<float> row(d);
  initial_row(config_.seed, bucket, d, row.data());
  for (int k = 0; k < d; ++k) acc[k] += row[k];
}

Vector EmbeddingModel::embed_token(std::string_view token) const {
  const int d = config_.dimension;
  std::vector<double> acc(d, 0.0);
  std::size_t n = 0;
  if (auto it = word_ids_.find(std::string(token)); it != word_ids_.end()) {
    const float* row = &word_rows_[std::size_t(it->second) * d];
    for (int k = 0; k < d; ++k) acc[k] += row[k];
    ++n;
  }
  for (auto b : ngram_buckets(token)) {
    add_bucket_row(b, acc);
    ++n;
  }
  Vector out(d, 0.0f);
  if (n == 0) return out;
  for (int k = 0; k < d; ++k) out[k] = static_cast<float>(acc[k] / double(n));
  return out;
}

void EmbeddingModel::index_words() {
  word_ids_.clear();
  for (std::uint32_t i = 0; i < words_.size(); ++i) word_ids_.emplace(words_[i], i);
}

EmbeddingModel train_model(const std::vector<TokenBag>& corpus, const TrainingConfig& config) {
  validate(config);
  const int d = config.dimension;

  std::map<std::string, std::uint64_t> freq;
  for (const auto& bag : corpus)
    for (const auto& t : bag) ++freq[t];
  std::vector<std::pair<std::string, std::uint64_t>> vocab;
  for (auto& [t, n] : freq)
    if (n >= static_cast<std::uint64_t>(config.min_count)) vocab.emplace_back(t, n);
  if (vocab.empty()) throw Error(ErrorKind::kEmptyCorpus, "no token occurs at least min_count times");
  std::stable_sort(vocab.begin(), vocab.end(), [](const auto& a, const auto& b) { return a.second > b.second; });

  EmbeddingModel model;
  model.config_ = config;
  model.config_.threads = 1;  // not part of the model
  for (auto& [t, n] : vocab) {
    model.words_.push_back(t);
    model.counts_.push_back(n);
  }
  model.index_words();
  const std::size_t nwords = model.words_.size();

  Trainer tr{config, d, {}, {}, {}, {}, {}, 0, {}};
  std::map<std::uint32_t, std::uint32_t> slot_of_bucket;  // ordered: deterministic slot numbering
  for (const auto& w : model.words_)
    for (auto b : ngram_buckets_for(w, config)) slot_of_bucket.emplace(b, 0);
  std::uint32_t next = static_cast<std::uint32_t>(nwords);
  for (auto& [b, slot] : slot_of_bucket) slot = next++;

  tr.input.resize(std::size_t(next) * d);
  for (std::uint32_t i = 0; i < nwords; ++i)
    initial_row(config.seed, word_row_id(config, i), d, &tr.input[std::size_t(i) * d]);
  for (const auto& [b, slot] : slot_of_bucket) initial_row(config.seed, b, d, &tr.input[std::size_t(slot) * d]);
  tr.output.assign(nwords * d, 0.0f);

  tr.word_inputs.resize(nwords);
  for (std::uint32_t i = 0; i < nwords; ++i) {
    tr.word_inputs[i].push_back(i);
    for (auto b : ngram_buckets_for(model.words_[i], config)) tr.word_inputs[i].push_back(slot_of_bucket.at(b));
  }

  double z = 0.0;
  for (auto c : model.counts_) z += std::sqrt(static_cast<double>(c));
  for (std::uint32_t i = 0; i < nwords; ++i) {
    const auto n = static_cast<std::size_t>(std::sqrt(static_cast<double>(model.counts_[i])) * kNegativeTableSize / z);
    tr.negative_table.insert(tr.negative_table.end(), std::max<std::size_t>(n, 1), i);
  }

  for (const auto& bag : corpus) {
    std::vector<std::uint32_t> ids;
    for (const auto& t : bag)
      if (auto it = model.word_ids_.find(t); it != model.word_ids_.end()) ids.push_back(it->second);
    tr.total_tokens += ids.size();
    if (!ids.empty()) tr.sentences.push_back(std::move(ids));
  }

  if (config.threads == 1) {
    tr.train_span(0, 1, config.seed);
  } else {
    std::vector<std::jthread> workers;
    for (int t = 0; t < config.threads; ++t)
      workers.emplace_back([&tr, t, &config] { tr.train_span(t, config.threads, config.seed + t); });
  }

  model.word_rows_.assign(tr.input.begin(), tr.input.begin() + nwords * d);
  for (const auto& [b, slot] : slot_of_bucket) {
    const auto* row = &tr.input[std::size_t(slot) * d];
    model.bucket_rows_.emplace(b, std::vector<float>(row, row + d));
  }
  return model;
}

std::string EmbeddingModel::serialize() const {
  const TrainingConfig& c = config_;
  detail::ByteWriter w;
  w.bytes("CFEM");
  w.u32(kModelVersion);
  w.u32(c.dimension);
  w.u32(c.n_min);
  w.u32(c.n_max);
  w.u32(c.buckets);
  w.u32(c.window);
  w.u32(c.negatives);
  w.u32(c.epochs);
  w.f64(c.learning_rate);
  w.u32(c.min_count);
  w.u64(c.seed);
  w.u32(static_cast<std::uint32_t>(words_.size()));
  for (std::size_t i = 0; i < words_.size(); ++i) {
    w.str(words_[i]);
    w.u64(counts_[i]);
  }
  for (float x : word_rows_) w.f32(x);
  std::vector<std::uint32_t> ids;
  for (const auto& [b, row] : bucket_rows_) ids.push_back(b);
  std::sort(ids.begin(), ids.end());
  w.u32(static_cast<std::uint32_t>(ids.size()));
  for (auto b : ids) {
    w.u32(b);
    for (float x : bucket_rows_.at(b)) w.f32(x);
  }
  return w.take();
}

EmbeddingModel EmbeddingModel::deserialize(std::string_view bytes) {
  detail::ByteReader r(bytes, "model");
  r.magic("CFEM");
  const std::uint32_t version = r.u32();
  if (version != kModelVersion)
    throw Error(ErrorKind::kVersionMismatch, "model file version " + std::to_string(version) + " is not supported");
  EmbeddingModel m;
  TrainingConfig& c = m.config_;
  c.dimension = static_cast<int>(r.u32());
  c.n_min = static_cast<int>(r.u32());
  c.n_max = static_cast<int>(r.u32());
  c.buckets = r.u32();
  c.window = static_cast<int>(r.u32());
  c.negatives = static_cast<int>(r.u32());
  c.epochs = static_cast<int>(r.u32());
  c.learning_rate = r.f64();
  c.min_count = static_cast<int>(r.u32());
  c.seed = r.u64();
  c.threads = 1;
  try {
    validate(c);
  } catch (const Error& e) {
    throw MalformedInput(r.offset(), std::string("model header: ") + e.what());
  }
  const int d = c.dimension;
  const std::uint32_t nwords = r.u32();
  for (std::uint32_t i = 0; i < nwords; ++i) {
    m.words_.push_back(r.str());
    m.counts_.push_back(r.u64());
  }
  m.index_words();
  if (m.word_ids_.size() != m.words_.size()) throw MalformedInput(r.offset(), "duplicate vocabulary entry");
  r.require(std::size_t(nwords) * d * 4);
  m.word_rows_.resize(std::size_t(nwords) * d);
  for (auto& x : m.word_rows_) x = r.f32();
  const std::uint32_t nbuckets = r.u32();
  for (std::uint32_t i = 0; i < nbuckets; ++i) {
    const std::uint32_t b = r.u32();
    if (b >= c.buckets) throw MalformedInput(r.offset() - 4, "bucket id out of range");
    std::vector<float> row(d);
    r.require(std::size_t(d) * 4);
    for (auto& x : row) x = r.f32();
    if (!m.bucket_rows_.emplace(b, std::move(row)).second) throw MalformedInput(r.offset(), "duplicate bucket row");
  }
  r.expect_end();
  return m;
}

}  // namespace dropin
