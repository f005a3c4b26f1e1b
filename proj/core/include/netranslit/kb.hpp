// core/include/netranslit/kb.hpp

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

#ifndef NETRANSLIT_KB_HPP_
#define NETRANSLIT_KB_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace netranslit {

// Bilingual phrase dictionary. Entries map a whole normalized source phrase
// to its target-script rendering; target word order is encoded in the value,
// so a hit can never produce the word-by-word reordering failure that naive
// compositional translation gives for organization names.
struct KnowledgeBase {
  std::unordered_map<std::string, std::string> entries;
  std::string source_path;
  std::string version;  // first comment line of the file, if any
  int duplicate_count = 0;

  std::size_t size() const { return entries.size(); }
};

// Lowercases and collapses whitespace; this is the lookup key form.
std::string normalize_kb_key(std::string_view phrase);

// Loads a UTF-8 tab-separated `source<TAB>target` file; '#' starts a comment
// line; duplicate keys keep the last value and are counted. Target text is
// NFC-normalized. Throws Error(kIo) for a missing file and Error(kFormat)
// with the line number for a line without a tab or with an empty field.
KnowledgeBase load_kb(const std::string& path);

// Exact whole-phrase lookup on the normalized form. A miss returns nullopt,
// which tells the pipeline to fall back to transliteration; partial or
// prefix matching is deliberately not attempted.
std::optional<std::string> translate(std::string_view entity_text,
                                     const KnowledgeBase& kb);

// Non-throwing full-file scan for `kb validate`.
struct KbValidation {
  std::size_t entry_count = 0;
  int duplicate_count = 0;
  std::vector<std::string> errors;    // format problems, one per bad line
  std::vector<std::string> warnings;  // duplicate keys (load keeps the last)

  bool ok() const { return errors.empty(); }
};

KbValidation validate_kb(const std::string& path);

}  // namespace netranslit

#endif  // NETRANSLIT_KB_HPP_
