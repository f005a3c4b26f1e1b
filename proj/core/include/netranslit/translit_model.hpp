// core/include/netranslit/translit_model.hpp

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

#ifndef NETRANSLIT_TRANSLIT_MODEL_HPP_
#define NETRANSLIT_TRANSLIT_MODEL_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netranslit/syllabifier.hpp"

namespace netranslit {

// One training example: a source name and its target rendering, both
// pre-split into syllables and aligned positionally 1:1.
struct ParallelPair {
  std::vector<std::string> source_syllables;
  std::vector<std::string> target_syllables;

  bool aligned() const {
    return !source_syllables.empty() &&
           source_syllables.size() == target_syllables.size();
  }
};

// Count-based conditional model: P(target | source) is the joint pair count
// over the source marginal, a pure relative frequency with no smoothing by
// default. Target syllables are opaque NFC-normalized UTF-8.
struct TransliterationModel {
  // source syllable -> (target syllable -> joint count)
  std::map<std::string, std::map<std::string, std::uint64_t>> joint_counts;
  // source syllable -> marginal count; always the row sum of joint_counts
  std::map<std::string, std::uint64_t> source_counts;
  // single letters/digraphs -> target grapheme, for syllables never seen in
  // training
  std::map<std::string, std::string> grapheme_fallback;
  std::string version = "v1";

  std::size_t distinct_sources() const { return source_counts.size(); }
  std::size_t distinct_targets() const;

  bool operator==(const TransliterationModel& other) const {
    return joint_counts == other.joint_counts &&
           source_counts == other.source_counts &&
           grapheme_fallback == other.grapheme_fallback &&
           version == other.version;
  }
};

struct TrainStats {
  std::size_t used_pairs = 0;
  std::size_t skipped_pairs = 0;  // lenient mode only
};

// Accumulates joint and marginal counts positionally. In strict mode a
// misaligned pair raises Error(kAlignment) with its index; in lenient mode
// it is skipped and counted. Zero usable pairs raise Error(kEmptyCorpus).
TransliterationModel train(const std::vector<ParallelPair>& pairs,
                           bool strict = false, TrainStats* stats = nullptr);

// C(source, target) / C(source); 0 for unseen pairs or sources. Total.
double prob(const TransliterationModel& model, std::string_view source_syll,
            std::string_view target_syll);

// Add-one smoothed variant: (C(s,t)+1) / (C(s)+V) with V the number of
// distinct target syllables in the model. Unseen sources still yield 0.
double prob_add_one(const TransliterationModel& model,
                    std::string_view source_syll,
                    std::string_view target_syll);

// Top-k targets for a source syllable by descending probability; ties break
// lexicographically on the target's Unicode scalar values (== UTF-8 byte
// order). Unseen sources give an empty list. k must be >= 1.
std::vector<std::pair<std::string, double>> candidates(
    const TransliterationModel& model, std::string_view source_syll, int k);

struct DecodeOptions {
  double epsilon = 1e-6;  // score contribution of a fallback syllable
  bool add_one_smoothing = false;
};

struct SyllableChoice {
  std::string source;
  std::string target;
  double probability = 0.0;
  bool used_fallback = false;
};

struct TransliterationCandidate {
  std::vector<std::string> target_syllables;
  double score = 0.0;  // product of per-syllable probabilities
  std::vector<SyllableChoice> per_syllable;

  std::string joined() const;
  bool any_fallback() const;
};

// Independently picks the argmax target for every syllable and multiplies
// the chosen probabilities into the final score. Unseen syllables go through
// the grapheme fallback map unit by unit (longest key match) and contribute
// the floor epsilon. A unit absent from both the model and the fallback map
// raises Error(kUntransliterableSyllable) naming the unit.
TransliterationCandidate decode(const TransliterationModel& model,
                                const SyllabifiedWord& word,
                                const DecodeOptions& options = {});

// Versioned text format: header `netranslit-model v1`, then one record per
// line: `J<TAB>src<TAB>tgt<TAB>count` joint counts and
// `F<TAB>unit<TAB>grapheme` fallback entries, sorted. load(save(m)) == m.
void save_model(const TransliterationModel& model, const std::string& path);
TransliterationModel load_model(const std::string& path);

// Built-in Latin-to-Gurmukhi letter/digraph map used when training does not
// supply one.
std::map<std::string, std::string> default_grapheme_fallback();

// Reads a training corpus: UTF-8 TSV, `source syllables<TAB>target
// syllables`, syllables space-separated, '#' comments. Target side is
// NFC-normalized. Pairs are returned as-is; alignment is checked by train().
std::vector<ParallelPair> load_corpus_tsv(const std::string& path);

}  // namespace netranslit

#endif  // NETRANSLIT_TRANSLIT_MODEL_HPP_
