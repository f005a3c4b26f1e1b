// core/src/syllabifier.cpp

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

#include "netranslit/syllabifier.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

namespace {

bool is_lower_alpha(char c) { return c >= 'a' && c <= 'z'; }

bool all_lower_alpha(std::string_view s) {
  return std::all_of(s.begin(), s.end(), is_lower_alpha);
}

// How a unit functions inside its word.
enum class UnitRole {
  kConsonant,
  kNucleus,           // starts a nucleus (vowel or nucleus-acting y unit)
  kNucleusExtension,  // second vowel of a configured diphthong
  kWholeUnit,         // standalone syllable
};

bool is_geminate(std::string_view unit, const SyllabificationRules& rules) {
  return unit.size() == 2 && unit[0] == unit[1] && !rules.is_vowel(unit[0]);
}

bool is_vowel_unit(std::string_view unit, const SyllabificationRules& rules) {
  return unit.size() == 1 && rules.is_vowel(unit[0]);
}

// Assigns a role to every unit of one word (or one syllable, when called
// from syllable_pattern; the y rule is positional, so the result depends on
// the extent it sees).
std::vector<UnitRole> classify_units(const std::vector<std::string>& units,
                                     const SyllabificationRules& rules) {
  const size_t n = units.size();
  std::vector<UnitRole> roles(n, UnitRole::kConsonant);

  // Vowel units from the right cache: does any vowel unit follow position i?
  std::vector<bool> vowel_after(n, false);
  bool seen_vowel = false;
  for (size_t i = n; i-- > 0;) {
    vowel_after[i] = seen_vowel;
    if (is_vowel_unit(units[i], rules)) seen_vowel = true;
  }

  for (size_t i = 0; i < n; ++i) {
    const std::string& unit = units[i];
    if (rules.whole_units.count(unit)) {
      roles[i] = UnitRole::kWholeUnit;
      continue;
    }
    if (is_vowel_unit(unit, rules)) {
      // Continuous vowels are separate nuclei unless the pair is a
      // configured diphthong; a diphthong absorbs at most one extension.
      if (i > 0 && roles[i - 1] == UnitRole::kNucleus &&
          is_vowel_unit(units[i - 1], rules) &&
          rules.diphthongs.count(units[i - 1] + unit)) {
        roles[i] = UnitRole::kNucleusExtension;
      } else {
        roles[i] = UnitRole::kNucleus;
      }
      continue;
    }
    // Trailing y acts as the nucleus when nothing vocalic follows and a
    // consonant precedes it ("ability" -> a/bi/li/ty, "silky" -> sil/ky),
    // covering digraph units that end in y.
    if (rules.final_y_is_nucleus && unit.back() == 'y' && !vowel_after[i]) {
      char preceding = 0;
      if (unit.size() >= 2) {
        preceding = unit[unit.size() - 2];
      } else if (i > 0) {
        preceding = units[i - 1].back();
      }
      if (preceding != 0 && !rules.is_vowel(preceding)) {
        roles[i] = UnitRole::kNucleus;
      }
    }
  }
  return roles;
}

std::string letters_only_lower(std::string_view word) {
  std::string out;
  out.reserve(word.size());
  for (char c : word) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc > 0x7f) {
      throw Error(ErrorKind::kUnsupportedScript,
                  "non-ASCII letter in word '" + std::string(word) + "'");
    }
    if (text::is_ascii_alpha(c)) {
      out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a')
                                         : c);
    }
  }
  return out;
}

std::string pattern_for_letters(std::string_view letters,
                                const SyllabificationRules& rules) {
  std::string pattern;
  pattern.reserve(letters.size());
  for (char c : letters) {
    pattern.push_back(rules.is_vowel(c) ? 'V' : 'C');
  }
  return pattern;
}

struct SyllableBuilder {
  std::vector<std::string> units;
  bool whole = false;

  std::string to_text() const {
    std::string out;
    for (const auto& u : units) out += u;
    return out;
  }
};

}  // namespace

void SyllabificationRules::validate() const {
  for (char v : vowels) {
    if (!is_lower_alpha(v)) {
      throw Error(ErrorKind::kConfig,
                  std::string("vowel entries must be lowercase letters, got '") +
                      v + "'");
    }
  }
  for (const auto& d : consonant_digraphs) {
    if (d.size() != 2 || !all_lower_alpha(d)) {
      throw Error(ErrorKind::kConfig,
                  "consonant_digraphs entries must be two lowercase letters, "
                  "got '" +
                      d + "'");
    }
  }
  for (const auto& w : whole_units) {
    if (w.size() < 3 || !all_lower_alpha(w)) {
      throw Error(ErrorKind::kConfig,
                  "whole_units entries must be >= 3 lowercase letters, got '" +
                      w + "'");
    }
    for (const auto& other : whole_units) {
      if (&other != &w && other.size() > w.size() &&
          other.compare(0, w.size(), w) == 0) {
        throw Error(ErrorKind::kConfig, "whole_unit '" + w +
                                            "' is a prefix of '" + other +
                                            "'; longest match would be "
                                            "ambiguous");
      }
    }
  }
  for (const auto& d : diphthongs) {
    if (d.size() != 2 || !is_vowel(d[0]) || !is_vowel(d[1])) {
      throw Error(ErrorKind::kConfig,
                  "diphthong entries must be two configured vowels, got '" + d +
                      "'");
    }
  }
}

SyllabificationRules SyllabificationRules::from_string(
    std::string_view config) {
  SyllabificationRules rules;
  const auto lines = text::split_lines(config);
  for (size_t i = 0; i < lines.size(); ++i) {
    std::string line = lines[i];
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = text::trim(line);
    if (line.empty()) continue;
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::kConfig, "expected `key = value`",
                  static_cast<int>(i + 1));
    }
    std::string key = text::trim(line.substr(0, eq));
    std::string value = text::trim(line.substr(eq + 1));

    auto parse_set = [&](std::set<std::string>* out) {
      out->clear();
      for (const auto& item : text::split(value, ',')) {
        std::string entry = text::ascii_lower(text::trim(item));
        if (!entry.empty()) out->insert(entry);
      }
    };

    if (key == "vowels") {
      rules.vowels.clear();
      for (const auto& item : text::split(value, ',')) {
        std::string entry = text::ascii_lower(text::trim(item));
        if (entry.empty()) continue;
        if (entry.size() != 1) {
          throw Error(ErrorKind::kConfig,
                      "vowels entries must be single letters, got '" + entry +
                          "'",
                      static_cast<int>(i + 1));
        }
        rules.vowels.insert(entry[0]);
      }
    } else if (key == "consonant_digraphs") {
      parse_set(&rules.consonant_digraphs);
    } else if (key == "whole_units") {
      parse_set(&rules.whole_units);
    } else if (key == "diphthongs") {
      parse_set(&rules.diphthongs);
    } else if (key == "final_y_is_nucleus") {
      std::string v = text::ascii_lower(value);
      if (v == "true" || v == "1" || v == "yes") {
        rules.final_y_is_nucleus = true;
      } else if (v == "false" || v == "0" || v == "no") {
        rules.final_y_is_nucleus = false;
      } else {
        throw Error(ErrorKind::kConfig,
                    "final_y_is_nucleus expects true/false, got '" + value +
                        "'",
                    static_cast<int>(i + 1));
      }
    } else {
      throw Error(ErrorKind::kConfig, "unknown rules key '" + key + "'",
                  static_cast<int>(i + 1));
    }
  }
  rules.validate();
  return rules;
}

SyllabificationRules SyllabificationRules::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open rules file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return from_string(buffer.str());
}

std::vector<std::string> SyllabifiedWord::syllable_texts() const {
  std::vector<std::string> texts;
  texts.reserve(syllables.size());
  for (const auto& s : syllables) texts.push_back(s.text);
  return texts;
}

std::string SyllabifiedWord::joined() const {
  std::string out;
  for (const auto& s : syllables) out += s.text;
  return out;
}

std::vector<std::string> segment_units(std::string_view word,
                                       const SyllabificationRules& rules) {
  if (word.empty()) {
    throw Error(ErrorKind::kEmptyWord, "cannot segment an empty word");
  }
  if (!all_lower_alpha(word)) {
    throw Error(ErrorKind::kUnsupportedScript,
                "segment_units expects lowercase a-z input, got '" +
                    std::string(word) + "'");
  }

  // Whole units are located first (leftmost, non-overlapping) so that a
  // geminate or digraph can never eat into one: "mission" must come out
  // m/i/s/sion, not m/i/ss/i/o/n.
  std::vector<size_t> whole_start(word.size(), 0);  // start -> unit length
  {
    size_t i = 0;
    while (i < word.size()) {
      bool matched = false;
      for (const auto& whole : rules.whole_units) {
        if (word.compare(i, whole.size(), whole) == 0) {
          whole_start[i] = whole.size();
          i += whole.size();
          matched = true;
          break;
        }
      }
      if (!matched) ++i;
    }
  }

  std::vector<std::string> units;
  size_t i = 0;
  while (i < word.size()) {
    if (whole_start[i] > 0) {
      units.emplace_back(word.substr(i, whole_start[i]));
      i += whole_start[i];
      continue;
    }
    // Two-letter matches may not cross into a locked whole unit.
    const bool pair_fits =
        i + 1 < word.size() && whole_start[i + 1] == 0;
    if (pair_fits && word[i] == word[i + 1] && !rules.is_vowel(word[i])) {
      units.emplace_back(word.substr(i, 2));  // geminate pair
      i += 2;
      continue;
    }
    if (pair_fits &&
        rules.consonant_digraphs.count(std::string(word.substr(i, 2)))) {
      units.emplace_back(word.substr(i, 2));
      i += 2;
      continue;
    }
    units.emplace_back(word.substr(i, 1));
    ++i;
  }
  return units;
}

std::vector<bool> mark_nuclei(const std::vector<std::string>& units,
                              const SyllabificationRules& rules) {
  const auto roles = classify_units(units, rules);
  std::vector<bool> nuclei(units.size(), false);
  for (size_t i = 0; i < units.size(); ++i) {
    nuclei[i] =
        roles[i] == UnitRole::kNucleus || roles[i] == UnitRole::kWholeUnit;
  }
  return nuclei;
}

SyllabifiedWord syllabify(std::string_view word,
                          const SyllabificationRules& rules) {
  const std::string letters = letters_only_lower(word);
  if (letters.empty()) {
    throw Error(ErrorKind::kEmptyWord,
                "no letters in input '" + std::string(word) + "'");
  }

  const auto units = segment_units(letters, rules);
  const auto roles = classify_units(units, rules);

  SyllabifiedWord result;
  result.original = std::string(word);

  // Anchor syllables: one per nucleus cluster (nucleus + diphthong
  // extensions) and one per whole unit.
  std::vector<SyllableBuilder> builders;
  std::vector<size_t> unit_owner(units.size(), SIZE_MAX);
  for (size_t i = 0; i < units.size(); ++i) {
    switch (roles[i]) {
      case UnitRole::kNucleus:
        builders.push_back({});
        unit_owner[i] = builders.size() - 1;
        break;
      case UnitRole::kNucleusExtension:
        unit_owner[i] = builders.size() - 1;
        break;
      case UnitRole::kWholeUnit:
        builders.push_back({});
        builders.back().whole = true;
        unit_owner[i] = builders.size() - 1;
        break;
      case UnitRole::kConsonant:
        break;
    }
  }

  if (builders.empty()) {
    // No nucleus at all (e.g. "bcd"): the whole word is one syllable so the
    // round-trip contract still holds.
    Syllable syll;
    syll.text = letters;
    syll.pattern.assign(units.size(), 'C');
    result.syllables.push_back(std::move(syll));
    return result;
  }

  // Distribute consonant runs between anchors.
  size_t i = 0;
  while (i < units.size()) {
    if (unit_owner[i] != SIZE_MAX) {
      ++i;
      continue;
    }
    size_t run_begin = i;
    while (i < units.size() && unit_owner[i] == SIZE_MAX) ++i;
    const size_t run_end = i;  // [run_begin, run_end)

    const bool has_left = run_begin > 0;
    const bool has_right = run_end < units.size();
    const size_t left = has_left ? unit_owner[run_begin - 1] : SIZE_MAX;
    const size_t right = has_right ? unit_owner[run_end] : SIZE_MAX;
    const bool left_open = has_left && !builders[left].whole;
    const bool right_open = has_right && !builders[right].whole;

    size_t split;  // units before `split` go left, the rest go right
    if (!has_right) {
      split = run_end;  // word-final run is a coda
    } else if (!has_left) {
      split = run_begin;  // word-initial run is an onset
    } else if (!right_open && left_open) {
      split = run_end;  // whole units take no onset
    } else if (!left_open && right_open) {
      split = run_begin;  // whole units take no coda
    } else if (!left_open && !right_open) {
      split = run_begin;  // degenerate: wedge between two whole units
    } else if (run_end - run_begin == 1) {
      split = run_begin;  // single consonant starts the next onset
    } else {
      split = run_end - 1;
      // A geminate never closes a coda; pull it into the onset.
      while (split > run_begin && is_geminate(units[split - 1], rules)) {
        --split;
      }
    }

    for (size_t j = run_begin; j < run_end; ++j) {
      size_t target = j < split ? left : right;
      if (target == SIZE_MAX) target = j < split ? right : left;
      unit_owner[j] = target;
    }
  }

  // Emit syllables in unit order; attached consonants land before/after the
  // anchor units naturally because we re-collect by owner.
  std::vector<SyllableBuilder> assembled(builders.size());
  for (size_t b = 0; b < builders.size(); ++b) {
    assembled[b].whole = builders[b].whole;
  }
  for (size_t j = 0; j < units.size(); ++j) {
    assembled[unit_owner[j]].units.push_back(units[j]);
  }

  for (size_t b = 0; b < assembled.size(); ++b) {
    Syllable syll;
    syll.text = assembled[b].to_text();
    if (assembled[b].whole) {
      syll.pattern = pattern_for_letters(syll.text, rules);
    } else {
      for (const auto& u : assembled[b].units) {
        // Re-derive the role from the original index-free view: vowels and
        // the anchoring nucleus are V, everything else C.
        if (is_vowel_unit(u, rules)) {
          syll.pattern.push_back('V');
        } else {
          syll.pattern.push_back('C');
        }
      }
      // The cluster anchor may be a nucleus-acting y unit; patch it to V.
      if (syll.pattern.find('V') == std::string::npos) {
        for (size_t j = 0, k = 0; j < units.size(); ++j) {
          if (unit_owner[j] != b) continue;
          if (roles[j] == UnitRole::kNucleus) {
            syll.pattern[k] = 'V';
            break;
          }
          ++k;
        }
      }
    }
    result.syllables.push_back(std::move(syll));
  }
  return result;
}

std::string syllable_pattern(std::string_view syllable_text,
                             const SyllabificationRules& rules) {
  if (syllable_text.empty()) {
    throw Error(ErrorKind::kEmptyWord, "cannot classify an empty syllable");
  }
  const auto units = segment_units(syllable_text, rules);
  const auto roles = classify_units(units, rules);
  std::string pattern;
  for (size_t i = 0; i < units.size(); ++i) {
    if (roles[i] == UnitRole::kWholeUnit) {
      pattern += pattern_for_letters(units[i], rules);
    } else if (roles[i] == UnitRole::kNucleus ||
               roles[i] == UnitRole::kNucleusExtension) {
      pattern.push_back('V');
    } else {
      pattern.push_back('C');
    }
  }
  return pattern;
}

}  // namespace netranslit
