// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "dropin/class_index.hpp"
#include "dropin/embedding.hpp"

namespace {

std::vector<dropin::TokenBag> corpus(std::size_t sentences) {
  static const char* words[] = {"list",   "size", "index", "element", "data",   "get",  "set",   "add",
                                "remove", "key",  "value", "map",     "buffer", "read", "write", "close"};
  std::mt19937_64 rng(7);
  std::vector<dropin::TokenBag> out(sentences);
  for (auto& s : out)
    for (int i = 0; i < 24; ++i) s.push_back(words[rng() % std::size(words)]);
  return out;
}

const dropin::EmbeddingModel& model() {
  static const auto m = [] {
    dropin::TrainingConfig cfg;
    cfg.epochs = 1;
    return dropin::train_model(corpus(200), cfg);
  }();
  return m;
}

void BM_TrainEpoch(benchmark::State& state) {
  const auto sentences = corpus(static_cast<std::size_t>(state.range(0)));
  dropin::TrainingConfig cfg;
  cfg.epochs = 1;
  cfg.dimension = 64;
  for (auto _ : state) benchmark::DoNotOptimize(dropin::train_model(sentences, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 24);
}
BENCHMARK(BM_TrainEpoch)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_EmbedBag(benchmark::State& state) {
  const auto bag = corpus(1)[0];
  model();  // train outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(model().embed_bag(bag));
}
BENCHMARK(BM_EmbedBag);

// Out-of-vocabulary tokens go through the subword path only.
void BM_EmbedUnknownToken(benchmark::State& state) {
  model();
  for (auto _ : state) benchmark::DoNotOptimize(model().embed_token("serializer"));
}
BENCHMARK(BM_EmbedUnknownToken);

void BM_IndexLookup(benchmark::State& state) {
  const int d = 150;
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(11);
  std::normal_distribution<float> g;
  dropin::ClassIndex index(d);
  dropin::Vector v(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto& x : v) x = g(rng);
    index.add("c" + std::to_string(i), v);
  }
  for (auto& x : v) x = g(rng);
  for (auto _ : state) benchmark::DoNotOptimize(index.lookup(v, 1000));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IndexLookup)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity();

}  // namespace
