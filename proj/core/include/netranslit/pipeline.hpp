// core/include/netranslit/pipeline.hpp

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

#ifndef NETRANSLIT_PIPELINE_HPP_
#define NETRANSLIT_PIPELINE_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "netranslit/entity_io.hpp"
#include "netranslit/evaluator.hpp"
#include "netranslit/kb.hpp"
#include "netranslit/syllabifier.hpp"
#include "netranslit/translit_model.hpp"

namespace netranslit {

struct PipelineConfig {
  std::string rules_path;  // empty = built-in defaults
  std::string model_path;
  std::string kb_path;
  bool strict_training = false;
  bool strict_tags = false;
  double epsilon = 1e-6;
  bool add_one_smoothing = false;
  Rounding rounding = Rounding::kHalfUp;

  // Throws Error(kConfig) when epsilon is outside (0, 1).
  void validate() const;
};

// Loaded, immutable run state: rules + model + knowledge base. Shareable
// across threads; every per-document operation is a pure read.
struct PipelineContext {
  SyllabificationRules rules;
  TransliterationModel model;
  KnowledgeBase kb;
  PipelineConfig config;

  static PipelineContext load(const PipelineConfig& config);
};

// What happened to one entity.
enum class Provenance {
  kTranslated,      // knowledge-base hit (LOCATION/ORGANIZATION)
  kTransliterated,  // direct transliteration (PERSON/MISCELLANEOUS)
  kFallback,        // LOCATION/ORGANIZATION that missed the KB
};

const char* to_string(Provenance p);

struct EntityOutcome {
  TaggedEntity entity;  // preprocessed form
  std::string output;
  Provenance provenance = Provenance::kTransliterated;
  bool used_grapheme_fallback = false;  // any syllable decoded via letter map
};

struct PipelineResult {
  std::string output;  // entities replaced, everything else verbatim
  std::vector<EntityOutcome> outcomes;  // one per entity, document order

  // Side-channel rendering: position, tag, provenance, source, output.
  std::string provenance_tsv() const;
};

// Full document flow: parse slash-tagged text, preprocess each entity, route
// by tag, translate via the KB or transliterate via syllables + model, and
// splice results back into the original lines. Errors from the stages are
// rethrown with the entity position attached.
PipelineResult run_pipeline(std::string_view document,
                            const PipelineContext& context);

// Transliterates one cleaned entity (word by word for multi-word spans).
std::string transliterate_text(std::string_view entity_text,
                               const PipelineContext& context,
                               bool* used_fallback = nullptr);

struct PrepStats {
  std::size_t written = 0;
  std::size_t rejected = 0;
};

// Corpus preparation: reads `name<TAB>target syllables` lines, syllabifies
// the source side, and writes aligned `source syllables<TAB>target
// syllables` lines. Misaligned or unusable lines go to the rejects file with
// a reason. Throws Error(kIo) when files cannot be opened.
PrepStats prep_corpus(const std::string& raw_path,
                      const SyllabificationRules& rules,
                      const std::string& out_path,
                      const std::string& rejects_path);

}  // namespace netranslit

#endif  // NETRANSLIT_PIPELINE_HPP_
