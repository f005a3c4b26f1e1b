// tools/netranslit_main.cpp

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

// Command-line front end:
//   netranslit train --in corpus.tsv --out model.txt [--strict]
//   netranslit prep  --in raw.tsv --rules rules.cfg --out corpus.tsv
//   netranslit run   --model model.txt --kb kb.tsv --rules rules.cfg < in.txt
//   netranslit eval  --system sys.txt --gold gold.txt [--tags tags.txt]
//   netranslit kb validate kb.tsv
// Exit codes: 0 ok, 1 usage error, 2 data/format error, 3 internal error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "netranslit/entity_io.hpp"
#include "netranslit/errors.hpp"
#include "netranslit/evaluator.hpp"
#include "netranslit/kb.hpp"
#include "netranslit/pipeline.hpp"
#include "netranslit/syllabifier.hpp"
#include "netranslit/text.hpp"
#include "netranslit/translit_model.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

std::string read_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw netranslit::Error(netranslit::ErrorKind::kIo,
                            "cannot open '" + path + "'");
  }
  return read_stream(in);
}

std::vector<std::string> read_lines_file(const std::string& path) {
  return netranslit::text::split_lines(read_file(path));
}

std::string default_rules_path() {
  const char* env = std::getenv("NETRANSLIT_RULES");
  return env != nullptr ? std::string(env) : std::string();
}

netranslit::SyllabificationRules load_rules_or_default(
    const std::string& rules_path) {
  if (rules_path.empty()) return netranslit::SyllabificationRules{};
  return netranslit::SyllabificationRules::from_file(rules_path);
}

int cmd_train(const std::string& in_path, const std::string& out_path,
              bool strict) {
  const auto pairs = netranslit::load_corpus_tsv(in_path);
  netranslit::TrainStats stats;
  const auto model = netranslit::train(pairs, strict, &stats);
  netranslit::save_model(model, out_path);
  std::cerr << "trained on " << stats.used_pairs << " pairs ("
            << stats.skipped_pairs << " skipped), "
            << model.distinct_sources() << " source syllables -> "
            << out_path << "\n";
  return kExitOk;
}

int cmd_prep(const std::string& in_path, const std::string& rules_path,
             const std::string& out_path, std::string rejects_path) {
  if (rejects_path.empty()) rejects_path = out_path + ".rejects";
  const auto rules = load_rules_or_default(rules_path);
  rules.validate();
  const auto stats =
      netranslit::prep_corpus(in_path, rules, out_path, rejects_path);
  std::cerr << "wrote " << stats.written << " aligned pairs to " << out_path
            << ", " << stats.rejected << " rejected -> " << rejects_path
            << "\n";
  return kExitOk;
}

int cmd_run(const std::string& model_path, const std::string& kb_path,
            const std::string& rules_path, bool strict_tags, double epsilon,
            bool smooth, const std::string& in_path,
            const std::string& out_path, const std::string& provenance_path) {
  netranslit::PipelineConfig config;
  config.model_path = model_path;
  config.kb_path = kb_path;
  config.rules_path = rules_path;
  config.strict_tags = strict_tags;
  config.epsilon = epsilon;
  config.add_one_smoothing = smooth;
  const auto context = netranslit::PipelineContext::load(config);

  std::string document =
      in_path.empty() ? read_stream(std::cin) : read_file(in_path);
  const auto result = netranslit::run_pipeline(document, context);

  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      throw netranslit::Error(netranslit::ErrorKind::kIo,
                              "cannot write '" + out_path + "'");
    }
    out << result.output;
  }

  const std::string provenance = result.provenance_tsv();
  if (provenance_path.empty()) {
    std::cerr << provenance;
  } else {
    std::ofstream prov(provenance_path, std::ios::binary);
    if (!prov) {
      throw netranslit::Error(netranslit::ErrorKind::kIo,
                              "cannot write '" + provenance_path + "'");
    }
    prov << provenance;
  }
  return kExitOk;
}

int cmd_eval(const std::string& system_path, const std::string& gold_path,
             const std::string& tags_path, const std::string& rounding_name) {
  const auto system_lines = read_lines_file(system_path);
  const auto gold_lines = read_lines_file(gold_path);

  std::vector<netranslit::EntityTag> tags;
  const bool have_tags = !tags_path.empty();
  if (have_tags) {
    for (const auto& line : read_lines_file(tags_path)) {
      const std::string name = netranslit::text::trim(line);
      if (name.empty()) continue;
      auto tag = netranslit::tag_from_string(name);
      if (!tag) {
        throw netranslit::Error(netranslit::ErrorKind::kUnknownTag,
                                "'" + name + "' in tags file");
      }
      tags.push_back(*tag);
    }
  }

  const auto rounding = rounding_name == "half-even"
                            ? netranslit::Rounding::kHalfEven
                            : netranslit::Rounding::kHalfUp;
  const auto report = netranslit::evaluate(system_lines, gold_lines,
                                           have_tags ? &tags : nullptr);
  std::cout << netranslit::render_report(report, rounding);
  return kExitOk;
}

int cmd_kb_validate(const std::string& kb_path) {
  const auto validation = netranslit::validate_kb(kb_path);
  std::cout << "entries: " << validation.entry_count << "\n";
  std::cout << "duplicates: " << validation.duplicate_count << "\n";
  for (const auto& warning : validation.warnings) {
    std::cout << "warning: " << warning << "\n";
  }
  std::cout << "format errors: " << validation.errors.size() << "\n";
  for (const auto& error : validation.errors) {
    std::cout << "error: " << error << "\n";
  }
  return validation.ok() ? kExitOk : kExitData;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Named-entity translation/transliteration toolkit"};
  app.require_subcommand(1);

  // train
  auto* train = app.add_subcommand("train", "Train a syllable-pair model");
  std::string train_in, train_out;
  bool train_strict = false;
  train->add_option("--in", train_in, "aligned corpus TSV")->required();
  train->add_option("--out", train_out, "model file to write")->required();
  train->add_flag("--strict", train_strict,
                  "fail on misaligned pairs instead of skipping them");

  // prep
  auto* prep = app.add_subcommand("prep", "Syllabify a raw name corpus");
  std::string prep_in, prep_rules = default_rules_path(), prep_out,
              prep_rejects;
  prep->add_option("--in", prep_in, "raw `name<TAB>target syllables` TSV")
      ->required();
  prep->add_option("--rules", prep_rules, "syllabification rules file");
  prep->add_option("--out", prep_out, "aligned corpus TSV to write")
      ->required();
  prep->add_option("--rejects", prep_rejects,
                   "rejects file (default: <out>.rejects)");

  // run
  auto* run = app.add_subcommand("run", "Run the entity pipeline");
  std::string run_model, run_kb, run_rules = default_rules_path(), run_in,
              run_out, run_prov;
  bool run_strict_tags = false, run_smooth = false;
  double run_epsilon = 1e-6;
  run->add_option("--model", run_model, "model file")->required();
  run->add_option("--kb", run_kb, "knowledge base TSV")->required();
  run->add_option("--rules", run_rules, "syllabification rules file");
  run->add_flag("--strict-tags", run_strict_tags,
                "one tag per token; no capitalized-span grouping");
  run->add_option("--epsilon", run_epsilon,
                  "score floor for fallback syllables");
  run->add_flag("--smooth", run_smooth, "add-one smoothing for decode");
  run->add_option("--in", run_in, "input document (default stdin)");
  run->add_option("--out", run_out, "output document (default stdout)");
  run->add_option("--provenance", run_prov,
                  "provenance TSV path (default stderr)");

  // eval
  auto* eval = app.add_subcommand("eval", "Score system output against gold");
  std::string eval_system, eval_gold, eval_tags, eval_rounding = "half-up";
  eval->add_option("--system", eval_system, "system output, one per line")
      ->required();
  eval->add_option("--gold", eval_gold, "gold references, one per line")
      ->required();
  eval->add_option("--tags", eval_tags, "entity tags, one per line");
  eval->add_option("--rounding", eval_rounding, "half-up (default) or half-even")
      ->check(CLI::IsMember({"half-up", "half-even"}));

  // kb validate
  auto* kb = app.add_subcommand("kb", "Knowledge base utilities");
  auto* kb_validate = kb->add_subcommand("validate", "Check a KB file");
  std::string kb_path;
  kb_validate->add_option("file", kb_path, "knowledge base TSV")->required();
  kb->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*train) return cmd_train(train_in, train_out, train_strict);
    if (*prep) return cmd_prep(prep_in, prep_rules, prep_out, prep_rejects);
    if (*run) {
      return cmd_run(run_model, run_kb, run_rules, run_strict_tags,
                     run_epsilon, run_smooth, run_in, run_out, run_prov);
    }
    if (*eval) return cmd_eval(eval_system, eval_gold, eval_tags,
                               eval_rounding);
    if (*kb_validate) return cmd_kb_validate(kb_path);
  } catch (const netranslit::Error& e) {
    std::cerr << "netranslit: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "netranslit: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
