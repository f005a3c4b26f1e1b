// core/include/netranslit/entity_io.hpp

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

#ifndef NETRANSLIT_ENTITY_IO_HPP_
#define NETRANSLIT_ENTITY_IO_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace netranslit {

enum class EntityTag { kPerson, kLocation, kOrganization, kMiscellaneous };

std::optional<EntityTag> tag_from_string(std::string_view name);
const char* to_string(EntityTag tag);

enum class Route { kTranslate, kTransliterate };

// PERSON and MISCELLANEOUS go straight to transliteration; LOCATION and
// ORGANIZATION go to knowledge-base translation (with transliteration as
// the miss fallback, handled by the pipeline).
Route route(EntityTag tag);

struct TaggedEntity {
  std::string text;  // surface form, possibly multi-word
  EntityTag tag;
  int position = 0;  // ordinal within the source document
};

bool operator==(const TaggedEntity& a, const TaggedEntity& b);

struct ParseOptions {
  // One tag per token: an entity is exactly the run of adjacent tokens that
  // carry the same tag. The default additionally pulls in an immediately
  // preceding run of untagged capitalized words (plus internal connector
  // words like "of"), which is how the NER tool prints multi-word spans with
  // a single trailing tag.
  bool strict_tags = false;
};

// All tagged entities of a slash-tagged document, in document order.
// Untagged tokens are ignored. Throws Error(kParse) for a dangling or empty
// tag marker and Error(kUnknownTag) for an unrecognized tag name, both with
// line/column positions.
std::vector<TaggedEntity> parse_tagged(std::string_view document,
                                       const ParseOptions& options = {});

// Strips residual tag markers, commas, hyphens and other punctuation, keeping
// letters and single internal spaces; tag and position are preserved.
// Idempotent. Throws Error(kEmptyEntity) when nothing survives cleaning.
TaggedEntity preprocess(const TaggedEntity& entity);

// Writes entities back in slash-tag form, one per line. parse_tagged of the
// result yields the same list for entities in the conventional capitalized
// form.
std::string render_tagged(const std::vector<TaggedEntity>& entities);

// Document model used to reassemble full-sentence output: every line keeps
// its exact text plus the byte spans occupied by entities so non-entity text
// can be passed through verbatim.
struct EntitySpan {
  std::size_t begin = 0;  // byte offsets into the line
  std::size_t end = 0;
  std::size_t entity_index = 0;  // into ParsedDocument::entities
};

struct ParsedLine {
  std::string text;
  std::vector<EntitySpan> spans;  // in increasing byte order
};

struct ParsedDocument {
  std::vector<ParsedLine> lines;
  std::vector<TaggedEntity> entities;
};

ParsedDocument parse_document(std::string_view document,
                              const ParseOptions& options = {});

}  // namespace netranslit

#endif  // NETRANSLIT_ENTITY_IO_HPP_
