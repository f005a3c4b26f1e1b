// core/src/translit_model.cpp

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

#include "netranslit/translit_model.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

namespace {

constexpr char kModelHeader[] = "netranslit-model";
constexpr char kModelVersion[] = "v1";

}  // namespace

std::size_t TransliterationModel::distinct_targets() const {
  std::set<std::string_view> targets;
  for (const auto& [src, row] : joint_counts) {
    for (const auto& [tgt, count] : row) targets.insert(tgt);
  }
  return targets.size();
}

TransliterationModel train(const std::vector<ParallelPair>& pairs, bool strict,
                           TrainStats* stats) {
  TransliterationModel model;
  model.grapheme_fallback = default_grapheme_fallback();

  TrainStats local;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const ParallelPair& pair = pairs[i];
    if (!pair.aligned()) {
      if (strict) {
        std::ostringstream msg;
        msg << "pair " << i << " has " << pair.source_syllables.size()
            << " source syllables but " << pair.target_syllables.size()
            << " target syllables";
        throw Error(ErrorKind::kAlignment, msg.str());
      }
      ++local.skipped_pairs;
      continue;
    }
    for (std::size_t j = 0; j < pair.source_syllables.size(); ++j) {
      const std::string& src = pair.source_syllables[j];
      const std::string tgt = text::nfc(pair.target_syllables[j]);
      ++model.joint_counts[src][tgt];
      ++model.source_counts[src];
    }
    ++local.used_pairs;
  }

  if (local.used_pairs == 0) {
    throw Error(ErrorKind::kEmptyCorpus, "no usable training pairs");
  }
  if (stats != nullptr) *stats = local;
  return model;
}

double prob(const TransliterationModel& model, std::string_view source_syll,
            std::string_view target_syll) {
  auto src = model.joint_counts.find(std::string(source_syll));
  if (src == model.joint_counts.end()) return 0.0;
  auto marginal = model.source_counts.find(std::string(source_syll));
  if (marginal == model.source_counts.end() || marginal->second == 0)
    return 0.0;
  auto tgt = src->second.find(std::string(target_syll));
  if (tgt == src->second.end()) return 0.0;
  return static_cast<double>(tgt->second) /
         static_cast<double>(marginal->second);
}

double prob_add_one(const TransliterationModel& model,
                    std::string_view source_syll,
                    std::string_view target_syll) {
  auto src = model.joint_counts.find(std::string(source_syll));
  if (src == model.joint_counts.end()) return 0.0;
  auto marginal = model.source_counts.find(std::string(source_syll));
  if (marginal == model.source_counts.end()) return 0.0;
  std::uint64_t joint = 0;
  auto tgt = src->second.find(std::string(target_syll));
  if (tgt != src->second.end()) joint = tgt->second;
  const double vocab = static_cast<double>(model.distinct_targets());
  return (static_cast<double>(joint) + 1.0) /
         (static_cast<double>(marginal->second) + vocab);
}

std::vector<std::pair<std::string, double>> candidates(
    const TransliterationModel& model, std::string_view source_syll, int k) {
  if (k < 1) throw std::invalid_argument("candidates: k must be >= 1");
  auto src = model.joint_counts.find(std::string(source_syll));
  if (src == model.joint_counts.end()) return {};
  auto marginal = model.source_counts.find(std::string(source_syll));
  if (marginal == model.source_counts.end() || marginal->second == 0)
    return {};

  std::vector<std::pair<std::string, double>> ranked;
  ranked.reserve(src->second.size());
  const double denom = static_cast<double>(marginal->second);
  for (const auto& [tgt, count] : src->second) {
    ranked.emplace_back(tgt, static_cast<double>(count) / denom);
  }
  // Descending probability; the map already yields targets in ascending
  // scalar order, so a stable sort gives the documented tie-break.
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(k);
  return ranked;
}

std::string TransliterationCandidate::joined() const {
  std::string out;
  for (const auto& t : target_syllables) out += t;
  return out;
}

bool TransliterationCandidate::any_fallback() const {
  for (const auto& c : per_syllable) {
    if (c.used_fallback) return true;
  }
  return false;
}

namespace {

// Greedy longest-key match of the fallback map over a syllable's letters.
std::string fallback_transliterate(
    const std::map<std::string, std::string>& fallback,
    std::string_view syllable) {
  std::size_t max_key = 0;
  for (const auto& [key, value] : fallback) {
    max_key = std::max(max_key, key.size());
  }
  std::string out;
  std::size_t i = 0;
  while (i < syllable.size()) {
    std::size_t len = std::min(max_key, syllable.size() - i);
    bool matched = false;
    for (; len >= 1; --len) {
      auto it = fallback.find(std::string(syllable.substr(i, len)));
      if (it != fallback.end()) {
        out += it->second;
        i += len;
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw Error(ErrorKind::kUntransliterableSyllable,
                  "no fallback grapheme for unit '" +
                      std::string(syllable.substr(i, 1)) + "' in syllable '" +
                      std::string(syllable) + "'");
    }
  }
  return out;
}

}  // namespace

TransliterationCandidate decode(const TransliterationModel& model,
                                const SyllabifiedWord& word,
                                const DecodeOptions& options) {
  TransliterationCandidate result;
  result.score = 1.0;

  for (const auto& syllable : word.syllables) {
    SyllableChoice choice;
    choice.source = syllable.text;

    auto best = candidates(model, syllable.text, 1);
    if (!best.empty()) {
      choice.target = best[0].first;
      choice.probability = options.add_one_smoothing
                               ? prob_add_one(model, syllable.text,
                                              best[0].first)
                               : best[0].second;
    } else {
      choice.target =
          fallback_transliterate(model.grapheme_fallback, syllable.text);
      choice.probability = options.epsilon;
      choice.used_fallback = true;
    }

    result.score *= choice.probability;
    result.target_syllables.push_back(choice.target);
    result.per_syllable.push_back(std::move(choice));
  }
  return result;
}

void save_model(const TransliterationModel& model, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write model file '" + path + "'");
  }
  out << kModelHeader << ' ' << model.version << '\n';
  for (const auto& [src, row] : model.joint_counts) {
    for (const auto& [tgt, count] : row) {
      out << "J\t" << src << '\t' << tgt << '\t' << count << '\n';
    }
  }
  for (const auto& [unit, grapheme] : model.grapheme_fallback) {
    out << "F\t" << unit << '\t' << grapheme << '\n';
  }
  if (!out.good()) {
    throw Error(ErrorKind::kIo, "short write to model file '" + path + "'");
  }
}

TransliterationModel load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open model file '" + path + "'");
  }

  TransliterationModel model;
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorKind::kFormat, "empty model file '" + path + "'", 1);
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  {
    const auto fields = text::split_whitespace(line);
    if (fields.size() != 2 || fields[0] != kModelHeader) {
      throw Error(ErrorKind::kFormat,
                  "missing `netranslit-model <version>` header", 1);
    }
    if (fields[1] != kModelVersion) {
      throw Error(ErrorKind::kVersion, "unsupported model version '" +
                                           fields[1] + "' (expected " +
                                           kModelVersion + ")");
    }
    model.version = fields[1];
  }

  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = text::split(line, '\t');
    if (fields[0] == "J") {
      if (fields.size() != 4 || fields[1].empty() || fields[2].empty()) {
        throw Error(ErrorKind::kFormat, "bad joint-count record", line_number);
      }
      std::uint64_t count = 0;
      try {
        std::size_t consumed = 0;
        count = std::stoull(fields[3], &consumed);
        if (consumed != fields[3].size()) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw Error(ErrorKind::kFormat,
                    "bad count '" + fields[3] + "' in joint-count record",
                    line_number);
      }
      const std::string tgt = text::nfc(fields[2]);
      model.joint_counts[fields[1]][tgt] += count;
      model.source_counts[fields[1]] += count;
    } else if (fields[0] == "F") {
      if (fields.size() != 3 || fields[1].empty() || fields[2].empty()) {
        throw Error(ErrorKind::kFormat, "bad fallback record", line_number);
      }
      model.grapheme_fallback[fields[1]] = text::nfc(fields[2]);
    } else {
      throw Error(ErrorKind::kFormat,
                  "unknown record type '" + fields[0] + "'", line_number);
    }
  }
  return model;
}

std::map<std::string, std::string> default_grapheme_fallback() {
  // Crude letter-level romanization map; used only when a syllable was never
  // seen in training, so decoding stays total.
  return {
      {"a", "ਅ"},  {"b", "ਬ"},  {"c", "ਕ"},  {"d", "ਦ"},  {"e", "ਏ"},
      {"f", "ਫ"},  {"g", "ਗ"},  {"h", "ਹ"},  {"i", "ਇ"},  {"j", "ਜ"},
      {"k", "ਕ"},  {"l", "ਲ"},  {"m", "ਮ"},  {"n", "ਨ"},  {"o", "ਓ"},
      {"p", "ਪ"},  {"q", "ਕ"},  {"r", "ਰ"},  {"s", "ਸ"},  {"t", "ਤ"},
      {"u", "ਉ"},  {"v", "ਵ"},  {"w", "ਵ"},  {"x", "ਕਸ"}, {"y", "ਯ"},
      {"z", "ਜ਼"}, {"sh", "ਸ਼"}, {"gh", "ਘ"}, {"ch", "ਚ"}, {"th", "ਥ"},
      {"ph", "ਫ"}, {"kh", "ਖ"}, {"bh", "ਭ"}, {"dh", "ਧ"}, {"ty", "ਤੀ"},
      {"ny", "ਨੀ"},
  };
}

std::vector<ParallelPair> load_corpus_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open corpus file '" + path + "'");
  }
  std::vector<ParallelPair> pairs;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string trimmed = text::trim(raw);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    std::size_t tab = raw.find('\t');
    if (tab == std::string::npos) {
      throw Error(ErrorKind::kFormat, "no tab separator in corpus line",
                  line_number);
    }
    ParallelPair pair;
    pair.source_syllables = text::split_whitespace(raw.substr(0, tab));
    for (auto& tgt : text::split_whitespace(raw.substr(tab + 1))) {
      pair.target_syllables.push_back(text::nfc(tgt));
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace netranslit
