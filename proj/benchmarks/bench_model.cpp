// benchmarks/bench_model.cpp

// Copyright 2026 The netranslit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <random>
#include <string>
#include <vector>

#include "netranslit/syllabifier.hpp"
#include "netranslit/translit_model.hpp"

namespace {

std::vector<netranslit::ParallelPair> make_corpus(std::size_t pairs) {
  static const char* kSources[] = {"ka", "ri", "mo", "na", "di", "leep",
                                   "ta", "su", "bha", "lo", "pre", "hit",
                                   "har", "ya", "sil", "ki"};
  static const char* kTargets[] = {"ਕਾ", "ਰੀ", "ਮੋ", "ਨਾ", "ਦਿ", "ਲੀਪ",
                                   "ਤਾ", "ਸੁ", "ਭਾ", "ਲੋ", "ਪ੍ਰੇ", "ਹਿਤ",
                                   "ਹਰ", "ਯਾ", "ਸਿਲ", "ਕੀ"};
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> len(1, 4);
  std::uniform_int_distribution<int> pick(0, 15);
  std::vector<netranslit::ParallelPair> corpus;
  corpus.reserve(pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    netranslit::ParallelPair pair;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) {
      pair.source_syllables.push_back(kSources[pick(rng)]);
      pair.target_syllables.push_back(kTargets[pick(rng)]);
    }
    corpus.push_back(std::move(pair));
  }
  return corpus;
}

void BM_Train(benchmark::State& state) {
  const auto corpus = make_corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const auto model = netranslit::train(corpus);
    benchmark::DoNotOptimize(model);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Train)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Decode(benchmark::State& state) {
  const auto model = netranslit::train(make_corpus(10000));
  const netranslit::SyllabificationRules rules;
  const auto word = netranslit::syllabify("haryana", rules);
  for (auto _ : state) {
    const auto result = netranslit::decode(model, word);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Decode);

}  // namespace

BENCHMARK_MAIN();
