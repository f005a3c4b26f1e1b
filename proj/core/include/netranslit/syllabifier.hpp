// core/include/netranslit/syllabifier.hpp

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

#ifndef NETRANSLIT_SYLLABIFIER_HPP_
#define NETRANSLIT_SYLLABIFIER_HPP_

#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace netranslit {

// Letter classes and multi-letter units driving segmentation. Every knob is
// data, not code: the useful digraph list is open ended, so deployments can
// extend it without rebuilding.
struct SyllabificationRules {
  std::set<char> vowels{'a', 'e', 'i', 'o', 'u'};
  // Two-letter consonant clusters pronounced as one sound.
  std::set<std::string> consonant_digraphs{"sh", "gh", "ty", "ny", "ch",
                                           "th", "ph", "kh", "bh", "dh"};
  // Letter groups that always form one standalone syllable.
  std::set<std::string> whole_units{"tion", "sion", "ment"};
  // Vowel pairs kept as a single nucleus; empty means continuous vowels
  // split into separate nuclei.
  std::set<std::string> diphthongs;
  bool final_y_is_nucleus = true;

  // Throws Error(kConfig) when a set entry violates the format contract
  // (lowercase alphabetic; digraphs of length 2; whole units of length >= 3
  // with no unit a prefix of another; diphthongs are vowel pairs).
  void validate() const;

  bool is_vowel(char c) const { return vowels.count(c) != 0; }

  // Reads `key = value` lines (sets comma-separated, '#' comments); fields
  // not mentioned keep their defaults. Throws kIo / kConfig.
  static SyllabificationRules from_file(const std::string& path);
  static SyllabificationRules from_string(std::string_view config);
};

struct Syllable {
  std::string text;     // lowercase grapheme units, concatenated
  std::string pattern;  // 'V'/'C' per unit; whole units classified per letter
};

struct SyllabifiedWord {
  std::string original;  // input as given, casing preserved
  std::vector<Syllable> syllables;

  std::vector<std::string> syllable_texts() const;
  // Concatenation of syllable texts; equals the lowercased letters of the
  // original input.
  std::string joined() const;
};

// Left-to-right longest-match tokenization of a lowercase a-z word into
// grapheme units. Match priority: whole units (located first, leftmost and
// non-overlapping, so no shorter match can split one), then geminate
// consonant pairs, then consonant digraphs, then single letters.
// Throws kEmptyWord on empty input, kUnsupportedScript on non a-z bytes.
std::vector<std::string> segment_units(std::string_view word,
                                       const SyllabificationRules& rules);

// True for units that carry a syllable nucleus: vowel units (continuous
// vowels count separately unless the pair is a configured diphthong, in which
// case the second vowel is folded into the first nucleus and marked false),
// whole units (self-contained syllables), and a trailing y-unit after a
// consonant with no vowel unit following it, when final_y_is_nucleus.
std::vector<bool> mark_nuclei(const std::vector<std::string>& units,
                              const SyllabificationRules& rules);

// Segments a word (case-insensitive, non-letters stripped) into syllables.
// Each nucleus anchors one syllable; a single intervocalic consonant unit
// becomes the next onset; longer runs split with the last unit to the next
// onset and the rest to the preceding coda, except that geminate units are
// pulled wholly into the onset; word-initial runs are onsets and word-final
// runs codas; whole units come out standalone.
// Throws kEmptyWord when no letters remain, kUnsupportedScript on non-ASCII
// letters.
SyllabifiedWord syllabify(std::string_view word,
                          const SyllabificationRules& rules);

// V/C classification of a syllable: one symbol per unit (digraphs and
// geminates are one C; a nucleus-acting y-unit is V), except whole units,
// which are classified letter by letter.
std::string syllable_pattern(std::string_view syllable_text,
                             const SyllabificationRules& rules);

}  // namespace netranslit

#endif  // NETRANSLIT_SYLLABIFIER_HPP_
