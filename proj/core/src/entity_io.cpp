// core/src/entity_io.cpp

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

#include "netranslit/entity_io.hpp"

#include <cctype>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

namespace {

bool is_punct_shell(char c) {
  switch (c) {
    case '.':
    case ',':
    case ';':
    case ':':
    case '!':
    case '?':
    case '(':
    case ')':
    case '[':
    case ']':
    case '"':
    case '\'':
      return true;
    default:
      return false;
  }
}

// Lowercase words allowed inside a capitalized multi-word span
// ("Indian Institute of Technology").
bool is_connector_word(std::string_view word) {
  static const char* kConnectors[] = {"of", "and", "the", "for", "de", "la"};
  std::string lower = text::ascii_lower(word);
  for (const char* c : kConnectors) {
    if (lower == c) return true;
  }
  return false;
}

struct Token {
  std::string_view raw;  // full token text
  std::size_t begin = 0;  // byte offset of raw in the line
  // Filled in when the token carries a tag:
  bool tagged = false;
  EntityTag tag = EntityTag::kPerson;
  std::string_view word;       // raw minus shell punctuation and tag suffix
  std::size_t word_begin = 0;  // offset of word in the line
  std::size_t tag_end = 0;     // offset just past "/TAG"
};

std::vector<Token> tokenize_line(std::string_view line, int line_number) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
    }
    if (i == start) break;

    Token token;
    token.raw = line.substr(start, i - start);
    token.begin = start;

    // Peel shell punctuation so "Hyderabad/LOCATION." still parses.
    std::size_t lead = 0;
    while (lead < token.raw.size() && is_punct_shell(token.raw[lead])) ++lead;
    std::size_t trail = token.raw.size();
    while (trail > lead && is_punct_shell(token.raw[trail - 1])) --trail;
    std::string_view core = token.raw.substr(lead, trail - lead);

    std::size_t slash = core.rfind('/');
    if (slash != std::string_view::npos) {
      std::string_view word = core.substr(0, slash);
      std::string_view suffix = core.substr(slash + 1);
      const int column = static_cast<int>(start + 1);
      if (suffix.empty()) {
        throw Error(ErrorKind::kParse,
                    "dangling '/' with no tag in token '" +
                        std::string(token.raw) + "'",
                    line_number, column);
      }
      bool all_upper = true;
      for (char c : suffix) {
        if (!text::is_ascii_upper(c)) {
          all_upper = false;
          break;
        }
      }
      // Only multi-letter uppercase suffixes are tag candidates; this keeps
      // ordinary slashed text like "km/h" or "and/or" out of the tag path.
      if (all_upper && suffix.size() >= 2) {
        auto tag = tag_from_string(suffix);
        if (!tag) {
          throw Error(ErrorKind::kUnknownTag,
                      "'" + std::string(suffix) + "' in token '" +
                          std::string(token.raw) + "'",
                      line_number, column);
        }
        if (word.empty()) {
          throw Error(ErrorKind::kParse,
                      "tag '" + std::string(suffix) + "' with no token text",
                      line_number, column);
        }
        token.tagged = true;
        token.tag = *tag;
        token.word = word;
        token.word_begin = token.begin + lead;
        token.tag_end = token.begin + lead + core.size();
      }
    }
    tokens.push_back(token);
  }
  return tokens;
}

bool starts_capitalized(std::string_view word) {
  for (char c : word) {
    if (text::is_ascii_alpha(c)) return text::is_ascii_upper(c);
    if (static_cast<unsigned char>(c) > 0x7f) return false;
  }
  return false;
}

std::string strip_shell(std::string_view token) {
  std::size_t lead = 0;
  while (lead < token.size() && is_punct_shell(token[lead])) ++lead;
  std::size_t trail = token.size();
  while (trail > lead && is_punct_shell(token[trail - 1])) --trail;
  return std::string(token.substr(lead, trail - lead));
}

}  // namespace

std::optional<EntityTag> tag_from_string(std::string_view name) {
  if (name == "PERSON") return EntityTag::kPerson;
  if (name == "LOCATION") return EntityTag::kLocation;
  if (name == "ORGANIZATION") return EntityTag::kOrganization;
  if (name == "MISCELLANEOUS" || name == "MISC")
    return EntityTag::kMiscellaneous;
  return std::nullopt;
}

const char* to_string(EntityTag tag) {
  switch (tag) {
    case EntityTag::kPerson:
      return "PERSON";
    case EntityTag::kLocation:
      return "LOCATION";
    case EntityTag::kOrganization:
      return "ORGANIZATION";
    case EntityTag::kMiscellaneous:
      return "MISCELLANEOUS";
  }
  return "PERSON";
}

Route route(EntityTag tag) {
  switch (tag) {
    case EntityTag::kLocation:
    case EntityTag::kOrganization:
      return Route::kTranslate;
    case EntityTag::kPerson:
    case EntityTag::kMiscellaneous:
      return Route::kTransliterate;
  }
  return Route::kTransliterate;
}

bool operator==(const TaggedEntity& a, const TaggedEntity& b) {
  return a.text == b.text && a.tag == b.tag && a.position == b.position;
}

ParsedDocument parse_document(std::string_view document,
                              const ParseOptions& options) {
  ParsedDocument doc;
  const auto lines = text::split_lines(document);
  int position = 0;

  for (std::size_t li = 0; li < lines.size(); ++li) {
    ParsedLine parsed;
    parsed.text = lines[li];
    const auto tokens = tokenize_line(parsed.text, static_cast<int>(li + 1));

    std::vector<bool> claimed(tokens.size(), false);
    for (std::size_t t = 0; t < tokens.size(); ++t) {
      if (!tokens[t].tagged) continue;

      // Merge a run of adjacent tokens carrying the same tag
      // ("New/LOCATION Delhi/LOCATION") into the entity just opened.
      bool merged = false;
      if (t > 0 && tokens[t - 1].tagged && claimed[t - 1] &&
          tokens[t - 1].tag == tokens[t].tag && !parsed.spans.empty() &&
          parsed.spans.back().entity_index == doc.entities.size() - 1) {
        TaggedEntity& open = doc.entities.back();
        open.text += " " + std::string(tokens[t].word);
        parsed.spans.back().end = tokens[t].tag_end;
        claimed[t] = true;
        merged = true;
      }
      if (merged) continue;

      // Default mode: extend backward over the capitalized run that the tag
      // closes ("Delhi University/ORGANIZATION").
      std::size_t first = t;
      if (!options.strict_tags) {
        std::size_t b = t;
        while (b > 0 && !tokens[b - 1].tagged && !claimed[b - 1]) {
          const std::string_view raw = tokens[b - 1].raw;
          // Trailing punctuation ends a span: "Arrived. Mohit/PERSON".
          if (is_punct_shell(raw.back())) break;
          std::string word = strip_shell(raw);
          if (word.empty()) break;
          if (!starts_capitalized(word) && !is_connector_word(word)) break;
          --b;
        }
        // Connectors cannot open a span.
        while (b < t && is_connector_word(strip_shell(tokens[b].raw))) ++b;
        first = b;
      }

      TaggedEntity entity;
      entity.tag = tokens[t].tag;
      entity.position = position++;
      std::string span_text;
      for (std::size_t j = first; j < t; ++j) {
        span_text += strip_shell(tokens[j].raw);
        span_text += ' ';
        claimed[j] = true;
      }
      span_text += std::string(tokens[t].word);
      claimed[t] = true;
      entity.text = span_text;

      EntitySpan span;
      if (first < t) {
        std::size_t lead = 0;
        while (lead < tokens[first].raw.size() &&
               is_punct_shell(tokens[first].raw[lead])) {
          ++lead;
        }
        span.begin = tokens[first].begin + lead;
      } else {
        span.begin = tokens[t].word_begin;
      }
      span.end = tokens[t].tag_end;
      span.entity_index = doc.entities.size();
      parsed.spans.push_back(span);
      doc.entities.push_back(std::move(entity));
    }
    doc.lines.push_back(std::move(parsed));
  }
  return doc;
}

std::vector<TaggedEntity> parse_tagged(std::string_view document,
                                       const ParseOptions& options) {
  return parse_document(document, options).entities;
}

TaggedEntity preprocess(const TaggedEntity& entity) {
  // Remove a residual "/TAG" marker per token first so the tag name's
  // letters do not leak into the cleaned text.
  std::string without_tags;
  for (const auto& token : text::split_whitespace(entity.text)) {
    std::string_view t = token;
    std::size_t slash = t.rfind('/');
    if (slash != std::string_view::npos &&
        tag_from_string(t.substr(slash + 1)).has_value()) {
      t = t.substr(0, slash);
    }
    if (!without_tags.empty()) without_tags.push_back(' ');
    without_tags += std::string(t);
  }

  // Character-class filter: letters and spaces survive, everything else
  // (commas, hyphens, digits, stray punctuation) is dropped.
  std::string filtered;
  filtered.reserve(without_tags.size());
  for (char c : without_tags) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (text::is_ascii_alpha(c) || c == ' ' || uc > 0x7f) {
      filtered.push_back(c);
    }
  }

  TaggedEntity cleaned = entity;
  cleaned.text = text::collapse_spaces(filtered);
  if (cleaned.text.empty()) {
    throw Error(ErrorKind::kEmptyEntity,
                "entity at position " + std::to_string(entity.position) +
                    " is empty after preprocessing");
  }
  return cleaned;
}

std::string render_tagged(const std::vector<TaggedEntity>& entities) {
  std::string out;
  for (const auto& e : entities) {
    out += e.text;
    out += '/';
    out += to_string(e.tag);
    out += '\n';
  }
  return out;
}

}  // namespace netranslit
