// tests/oracles.hpp

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

// Independent reference implementations used only by tests. These stay
// deliberately naive (linear scans, character filters) so they share no code
// path with the library they check.

#ifndef NETRANSLIT_TESTS_ORACLES_HPP_
#define NETRANSLIT_TESTS_ORACLES_HPP_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "netranslit/translit_model.hpp"

namespace oracles {

// Brute-force relative frequency: scans the raw pair list for every query.
inline double counting_prob(const std::vector<netranslit::ParallelPair>& pairs,
                            std::string_view source, std::string_view target) {
  std::uint64_t joint = 0;
  std::uint64_t marginal = 0;
  for (const auto& pair : pairs) {
    if (pair.source_syllables.size() != pair.target_syllables.size()) continue;
    if (pair.source_syllables.empty()) continue;
    for (std::size_t i = 0; i < pair.source_syllables.size(); ++i) {
      if (pair.source_syllables[i] == source) {
        ++marginal;
        if (pair.target_syllables[i] == target) ++joint;
      }
    }
  }
  if (marginal == 0) return 0.0;
  return static_cast<double>(joint) / static_cast<double>(marginal);
}

// Every (source, target) pair that occurs in the corpus, duplicates removed.
inline std::vector<std::pair<std::string, std::string>> observed_pairs(
    const std::vector<netranslit::ParallelPair>& pairs) {
  std::vector<std::pair<std::string, std::string>> seen;
  for (const auto& pair : pairs) {
    if (pair.source_syllables.size() != pair.target_syllables.size()) continue;
    for (std::size_t i = 0; i < pair.source_syllables.size(); ++i) {
      std::pair<std::string, std::string> key{pair.source_syllables[i],
                                              pair.target_syllables[i]};
      bool found = false;
      for (const auto& existing : seen) {
        if (existing == key) {
          found = true;
          break;
        }
      }
      if (!found) seen.push_back(std::move(key));
    }
  }
  return seen;
}

// The preprocessing contract as a character filter: letters and single
// internal spaces survive, nothing else does.
inline std::string char_filter(std::string_view s) {
  std::string kept;
  for (char c : s) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == ' ') {
      kept.push_back(c);
    }
  }
  std::string out;
  bool pending = false;
  for (char c : kept) {
    if (c == ' ') {
      if (!out.empty()) pending = true;
    } else {
      if (pending) out.push_back(' ');
      pending = false;
      out.push_back(c);
    }
  }
  return out;
}

// Deterministic random corpora for the oracle-equivalence property suite.
inline std::vector<netranslit::ParallelPair> random_corpus(std::mt19937& rng,
                                                           int max_pairs) {
  static const char* kSources[] = {"ka", "ri", "mo",  "na", "di", "leep",
                                   "ta", "su", "bha", "lo", "pre", "hit"};
  static const char* kTargets[] = {"ਕਾ", "ਰੀ", "ਮੋ", "ਨਾ", "ਦਿ", "ਲੀਪ",
                                   "ਤਾ", "ਸੁ", "ਭਾ", "ਲੋ", "ਪ੍ਰੇ", "ਹਿਤ"};
  std::uniform_int_distribution<int> pair_count(1, max_pairs);
  std::uniform_int_distribution<int> word_len(1, 4);
  std::uniform_int_distribution<int> source_pick(0, 11);
  std::uniform_int_distribution<int> target_pick(0, 11);

  std::vector<netranslit::ParallelPair> pairs;
  const int n = pair_count(rng);
  for (int i = 0; i < n; ++i) {
    netranslit::ParallelPair pair;
    const int len = word_len(rng);
    for (int j = 0; j < len; ++j) {
      pair.source_syllables.push_back(kSources[source_pick(rng)]);
      pair.target_syllables.push_back(kTargets[target_pick(rng)]);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

inline std::string random_letter_word(std::mt19937& rng, int min_len,
                                      int max_len) {
  std::uniform_int_distribution<int> len_pick(min_len, max_len);
  std::uniform_int_distribution<int> letter_pick(0, 25);
  const int len = len_pick(rng);
  std::string word;
  word.reserve(len);
  for (int i = 0; i < len; ++i) {
    word.push_back(static_cast<char>('a' + letter_pick(rng)));
  }
  return word;
}

}  // namespace oracles

#endif  // NETRANSLIT_TESTS_ORACLES_HPP_
