// core/include/netranslit/evaluator.hpp

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

#ifndef NETRANSLIT_EVALUATOR_HPP_
#define NETRANSLIT_EVALUATOR_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netranslit/entity_io.hpp"

namespace netranslit {

// 100 * correct / total. Throws Error(kDivisionByZero) when total is 0.
double accuracy(std::uint64_t correct, std::uint64_t total);

// Same ratio as accuracy; this toolkit's precision divides correct
// outputs by total words, not by system attempts, so the two coincide. Kept
// as a separate entry point because reports quote them separately.
double precision(std::uint64_t correct, std::uint64_t total_words);

// 100 * system_correct / reference_correct.
double recall(std::uint64_t system_correct, std::uint64_t reference_correct);

// Harmonic mean 2PR/(P+R) of percentage-valued inputs; the result stays in
// percent (no extra x100), and is 0 when P+R is 0.
double f_measure(double precision_pct, double recall_pct);

enum class Rounding { kHalfUp, kHalfEven };

// Rounds a percentage to two decimals for reporting.
double round_pct(double value, Rounding mode = Rounding::kHalfUp);

struct TagBreakdown {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  double accuracy_pct = 0.0;
};

struct EvalReport {
  std::uint64_t total = 0;
  std::uint64_t correct = 0;
  double accuracy_pct = 0.0;
  double precision_pct = 0.0;
  double recall_pct = 0.0;
  double f_measure_pct = 0.0;
  std::map<EntityTag, TagBreakdown> per_tag;
  // Populated when tags are supplied: PERSON/MISC vs LOCATION/ORG group
  // accuracies and their mean.
  std::optional<double> transliteration_accuracy_pct;
  std::optional<double> translation_accuracy_pct;
  std::optional<double> macro_average_pct;
};

// Exact-string comparison after NFC normalization; no partial credit.
// `tags`, when given, must be aligned with the outputs and adds the per-tag
// and per-group breakdowns. Throws Error(kShape) on length mismatch and
// Error(kDivisionByZero) on empty input.
EvalReport evaluate(const std::vector<std::string>& system_output,
                    const std::vector<std::string>& gold,
                    const std::vector<EntityTag>* tags = nullptr);

// Plain-text table plus a machine-readable key=value block.
std::string render_report(const EvalReport& report,
                          Rounding rounding = Rounding::kHalfUp);

}  // namespace netranslit

#endif  // NETRANSLIT_EVALUATOR_HPP_
