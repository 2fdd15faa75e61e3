// Copyright 2026 The dropin Authors.
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "dropin/engine.hpp"
#include "dropin/extractor.hpp"
#include "dropin/tokenizer.hpp"

namespace {

struct Walkthrough {
  std::vector<dropin::ClassDescriptor> classes;
  dropin::EmbeddingModel model;
  dropin::ClassIndex index;
  dropin::Corpus corpus;
};

std::vector<dropin::ClassDescriptor> load() {
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(DROPIN_BENCH_FIXTURES "/walkthrough"))
    if (e.path().extension() == ".java") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<dropin::ClassDescriptor> out;
  for (const auto& f : files) {
    std::ifstream in(f);
    std::stringstream s;
    s << in.rdbuf();
    for (auto& c : dropin::parse_source(s.str(), f.string()).classes) out.push_back(std::move(c));
  }
  return out;
}

const Walkthrough& walkthrough() {
  static const Walkthrough w = [] {
    auto classes = load();
    std::vector<dropin::TokenBag> sentences;
    for (const auto& c : classes) sentences.push_back(dropin::class_tokens(c));
    auto model = dropin::train_model(sentences);
    auto index = dropin::index_build(classes, model);
    dropin::Corpus corpus(classes);
    return Walkthrough{std::move(classes), std::move(model), std::move(index), std::move(corpus)};
  }();
  return w;
}

const dropin::ClassDescriptor& array_list() {
  const auto& w = walkthrough();
  return *std::find_if(w.classes.begin(), w.classes.end(),
                       [](const auto& c) { return c.qualified_name == "java.util.ArrayList"; });
}

void BM_QueryWalkthrough(benchmark::State& state) {
  const auto& w = walkthrough();
  dropin::EngineConfig cfg;
  cfg.jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(dropin::query(array_list(), w.index, w.corpus, w.model, cfg));
}
BENCHMARK(BM_QueryWalkthrough)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_ParseWalkthrough(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(load());
}
BENCHMARK(BM_ParseWalkthrough)->Unit(benchmark::kMillisecond);

}  // namespace
