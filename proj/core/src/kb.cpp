// core/src/kb.cpp

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

#include "netranslit/kb.hpp"

#include <fstream>
#include <sstream>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

namespace {

struct KbLine {
  enum class Kind { kEntry, kComment, kBlank, kBad } kind = Kind::kBlank;
  std::string key;
  std::string value;
  std::string error;
};

KbLine parse_kb_line(const std::string& raw) {
  KbLine result;
  std::string line = raw;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  std::string trimmed = text::trim(line);
  if (trimmed.empty()) return result;
  if (trimmed[0] == '#') {
    result.kind = KbLine::Kind::kComment;
    result.value = trimmed;
    return result;
  }
  std::size_t tab = line.find('\t');
  if (tab == std::string::npos) {
    result.kind = KbLine::Kind::kBad;
    result.error = "no tab separator";
    return result;
  }
  result.key = normalize_kb_key(line.substr(0, tab));
  result.value = text::nfc(text::trim(line.substr(tab + 1)));
  if (result.key.empty()) {
    result.kind = KbLine::Kind::kBad;
    result.error = "empty source phrase";
    return result;
  }
  if (result.value.empty()) {
    result.kind = KbLine::Kind::kBad;
    result.error = "empty target phrase";
    return result;
  }
  result.kind = KbLine::Kind::kEntry;
  return result;
}

}  // namespace

std::string normalize_kb_key(std::string_view phrase) {
  return text::collapse_spaces(text::ascii_lower(phrase));
}

KnowledgeBase load_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open knowledge base '" + path + "'");
  }
  KnowledgeBase kb;
  kb.source_path = path;

  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    KbLine line = parse_kb_line(raw);
    switch (line.kind) {
      case KbLine::Kind::kBlank:
        break;
      case KbLine::Kind::kComment:
        if (kb.version.empty()) kb.version = line.value;
        break;
      case KbLine::Kind::kBad:
        throw Error(ErrorKind::kFormat, line.error + " in '" + path + "'",
                    line_number);
      case KbLine::Kind::kEntry: {
        auto [it, inserted] = kb.entries.insert_or_assign(
            std::move(line.key), std::move(line.value));
        (void)it;
        if (!inserted) ++kb.duplicate_count;
        break;
      }
    }
  }
  return kb;
}

std::optional<std::string> translate(std::string_view entity_text,
                                     const KnowledgeBase& kb) {
  auto it = kb.entries.find(normalize_kb_key(entity_text));
  if (it == kb.entries.end()) return std::nullopt;
  return it->second;
}

KbValidation validate_kb(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    KbValidation v;
    v.errors.push_back("cannot open '" + path + "'");
    return v;
  }
  KbValidation v;
  std::unordered_map<std::string, int> seen;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    KbLine line = parse_kb_line(raw);
    switch (line.kind) {
      case KbLine::Kind::kBlank:
      case KbLine::Kind::kComment:
        break;
      case KbLine::Kind::kBad: {
        std::ostringstream msg;
        msg << "line " << line_number << ": " << line.error;
        v.errors.push_back(msg.str());
        break;
      }
      case KbLine::Kind::kEntry: {
        auto [it, inserted] = seen.emplace(line.key, line_number);
        if (!inserted) {
          ++v.duplicate_count;
          std::ostringstream msg;
          msg << "line " << line_number << ": duplicate key '" << line.key
              << "' (first at line " << it->second << ")";
          v.warnings.push_back(msg.str());
        }
        break;
      }
    }
  }
  v.entry_count = seen.size();
  return v;
}

}  // namespace netranslit
