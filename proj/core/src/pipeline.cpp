// core/src/pipeline.cpp

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

#include "netranslit/pipeline.hpp"

#include <fstream>
#include <sstream>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

void PipelineConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorKind::kConfig,
                "epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
}

PipelineContext PipelineContext::load(const PipelineConfig& config) {
  config.validate();
  PipelineContext context;
  context.config = config;
  context.rules = config.rules_path.empty()
                      ? SyllabificationRules{}
                      : SyllabificationRules::from_file(config.rules_path);
  context.rules.validate();
  context.model = load_model(config.model_path);
  context.kb = load_kb(config.kb_path);
  return context;
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::kTranslated:
      return "translated";
    case Provenance::kTransliterated:
      return "transliterated";
    case Provenance::kFallback:
      return "fallback";
  }
  return "transliterated";
}

std::string transliterate_text(std::string_view entity_text,
                               const PipelineContext& context,
                               bool* used_fallback) {
  DecodeOptions options;
  options.epsilon = context.config.epsilon;
  options.add_one_smoothing = context.config.add_one_smoothing;

  std::string out;
  bool fallback = false;
  for (const auto& word : text::split_whitespace(entity_text)) {
    const SyllabifiedWord syllabified = syllabify(word, context.rules);
    const TransliterationCandidate candidate =
        decode(context.model, syllabified, options);
    if (!out.empty()) out.push_back(' ');
    out += candidate.joined();
    fallback = fallback || candidate.any_fallback();
  }
  if (used_fallback != nullptr) *used_fallback = fallback;
  return out;
}

PipelineResult run_pipeline(std::string_view document,
                            const PipelineContext& context) {
  ParseOptions parse_options;
  parse_options.strict_tags = context.config.strict_tags;
  const ParsedDocument parsed = parse_document(document, parse_options);

  PipelineResult result;
  result.outcomes.reserve(parsed.entities.size());

  // Resolve every entity once, in document order.
  std::vector<std::string> replacements(parsed.entities.size());
  for (std::size_t i = 0; i < parsed.entities.size(); ++i) {
    try {
      const TaggedEntity cleaned = preprocess(parsed.entities[i]);
      EntityOutcome outcome;
      outcome.entity = cleaned;

      if (route(cleaned.tag) == Route::kTranslate) {
        if (auto hit = translate(cleaned.text, context.kb)) {
          outcome.output = *hit;
          outcome.provenance = Provenance::kTranslated;
        } else {
          outcome.output = transliterate_text(
              cleaned.text, context, &outcome.used_grapheme_fallback);
          outcome.provenance = Provenance::kFallback;
        }
      } else {
        outcome.output = transliterate_text(cleaned.text, context,
                                            &outcome.used_grapheme_fallback);
        outcome.provenance = Provenance::kTransliterated;
      }

      replacements[i] = outcome.output;
      result.outcomes.push_back(std::move(outcome));
    } catch (const Error& e) {
      throw Error(e.kind(),
                  "entity " + std::to_string(parsed.entities[i].position) +
                      " ('" + parsed.entities[i].text + "'): " + e.what());
    }
  }

  // Reassemble: splice replacements over the entity spans, keep the rest of
  // every line byte for byte, including the original line termination.
  std::ostringstream out;
  for (std::size_t li = 0; li < parsed.lines.size(); ++li) {
    const auto& line = parsed.lines[li];
    std::size_t cursor = 0;
    for (const auto& span : line.spans) {
      out << line.text.substr(cursor, span.begin - cursor);
      out << replacements[span.entity_index];
      cursor = span.end;
    }
    out << line.text.substr(cursor);
    if (li + 1 < parsed.lines.size()) out << '\n';
  }
  if (!document.empty() && document.back() == '\n') out << '\n';
  result.output = out.str();
  return result;
}

std::string PipelineResult::provenance_tsv() const {
  std::ostringstream out;
  for (const auto& o : outcomes) {
    out << o.entity.position << '\t' << netranslit::to_string(o.entity.tag)
        << '\t' << netranslit::to_string(o.provenance) << '\t'
        << o.entity.text << '\t' << o.output;
    if (o.used_grapheme_fallback) out << "\tgrapheme-fallback";
    out << '\n';
  }
  return out.str();
}

PrepStats prep_corpus(const std::string& raw_path,
                      const SyllabificationRules& rules,
                      const std::string& out_path,
                      const std::string& rejects_path) {
  std::ifstream in(raw_path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open raw corpus '" + raw_path + "'");
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kIo, "cannot write corpus '" + out_path + "'");
  }
  std::ofstream rejects(rejects_path, std::ios::binary);
  if (!rejects) {
    throw Error(ErrorKind::kIo,
                "cannot write rejects file '" + rejects_path + "'");
  }

  PrepStats stats;
  std::string raw;
  int line_number = 0;
  while (std::getline(in, raw)) {
    ++line_number;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    std::string trimmed = text::trim(raw);
    if (trimmed.empty() || trimmed[0] == '#') continue;

    auto reject = [&](const std::string& reason) {
      rejects << "line " << line_number << ": " << reason << ": " << raw
              << '\n';
      ++stats.rejected;
    };

    std::size_t tab = raw.find('\t');
    if (tab == std::string::npos) {
      reject("no tab separator");
      continue;
    }
    const std::string name = text::trim(raw.substr(0, tab));
    std::vector<std::string> target_syllables;
    for (auto& t : text::split_whitespace(raw.substr(tab + 1))) {
      target_syllables.push_back(text::nfc(t));
    }
    if (target_syllables.empty()) {
      reject("empty target side");
      continue;
    }

    SyllabifiedWord syllabified;
    try {
      // Names are transliterated as single words; spaces and punctuation in
      // the source field are stripped by the syllabifier.
      syllabified = syllabify(name, rules);
    } catch (const Error& e) {
      reject(e.what());
      continue;
    }

    if (syllabified.syllables.size() != target_syllables.size()) {
      std::ostringstream reason;
      reason << "syllable count mismatch (source "
             << syllabified.syllables.size() << ": ";
      const auto texts = syllabified.syllable_texts();
      for (std::size_t i = 0; i < texts.size(); ++i) {
        if (i > 0) reason << '/';
        reason << texts[i];
      }
      reason << "; target " << target_syllables.size() << ")";
      reject(reason.str());
      continue;
    }

    const auto texts = syllabified.syllable_texts();
    for (std::size_t i = 0; i < texts.size(); ++i) {
      if (i > 0) out << ' ';
      out << texts[i];
    }
    out << '\t';
    for (std::size_t i = 0; i < target_syllables.size(); ++i) {
      if (i > 0) out << ' ';
      out << target_syllables[i];
    }
    out << '\n';
    ++stats.written;
  }
  return stats;
}

}  // namespace netranslit
