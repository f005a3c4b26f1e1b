// benchmarks/bench_syllabify.cpp

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

namespace {

std::vector<std::string> make_words(std::size_t count) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> len(3, 12);
  std::uniform_int_distribution<int> letter(0, 25);
  std::vector<std::string> words;
  words.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::string word;
    const int n = len(rng);
    for (int j = 0; j < n; ++j) {
      word.push_back(static_cast<char>('a' + letter(rng)));
    }
    words.push_back(std::move(word));
  }
  return words;
}

void BM_Syllabify(benchmark::State& state) {
  const netranslit::SyllabificationRules rules;
  const auto words = make_words(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto result = netranslit::syllabify(words[i++ & 1023], rules);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Syllabify);

void BM_SegmentUnits(benchmark::State& state) {
  const netranslit::SyllabificationRules rules;
  const auto words = make_words(1024);
  std::size_t i = 0;
  for (auto _ : state) {
    const auto units = netranslit::segment_units(words[i++ & 1023], rules);
    benchmark::DoNotOptimize(units);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_SegmentUnits);

}  // namespace

BENCHMARK_MAIN();
