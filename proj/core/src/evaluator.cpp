// core/src/evaluator.cpp

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

#include "netranslit/evaluator.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include "netranslit/errors.hpp"
#include "netranslit/text.hpp"

namespace netranslit {

double accuracy(std::uint64_t correct, std::uint64_t total) {
  if (total == 0) {
    throw Error(ErrorKind::kDivisionByZero,
                "accuracy needs a non-zero total");
  }
  return 100.0 * static_cast<double>(correct) / static_cast<double>(total);
}

double precision(std::uint64_t correct, std::uint64_t total_words) {
  if (total_words == 0) {
    throw Error(ErrorKind::kDivisionByZero,
                "precision needs a non-zero word count");
  }
  return 100.0 * static_cast<double>(correct) /
         static_cast<double>(total_words);
}

double recall(std::uint64_t system_correct, std::uint64_t reference_correct) {
  if (reference_correct == 0) {
    throw Error(ErrorKind::kDivisionByZero,
                "recall needs a non-zero reference count");
  }
  return 100.0 * static_cast<double>(system_correct) /
         static_cast<double>(reference_correct);
}

double f_measure(double precision_pct, double recall_pct) {
  const double sum = precision_pct + recall_pct;
  if (sum <= 0.0) return 0.0;
  return 2.0 * precision_pct * recall_pct / sum;
}

double round_pct(double value, Rounding mode) {
  const double scaled = value * 100.0;
  double rounded;
  if (mode == Rounding::kHalfUp) {
    rounded = std::floor(scaled + 0.5);
  } else {
    rounded = std::nearbyint(scaled);  // ties to even under default FP mode
  }
  return rounded / 100.0;
}

EvalReport evaluate(const std::vector<std::string>& system_output,
                    const std::vector<std::string>& gold,
                    const std::vector<EntityTag>* tags) {
  if (system_output.size() != gold.size()) {
    throw Error(ErrorKind::kShape,
                "system and gold lists differ in length (" +
                    std::to_string(system_output.size()) + " vs " +
                    std::to_string(gold.size()) + ")");
  }
  if (tags != nullptr && tags->size() != system_output.size()) {
    throw Error(ErrorKind::kShape,
                "tags list differs in length from outputs (" +
                    std::to_string(tags->size()) + " vs " +
                    std::to_string(system_output.size()) + ")");
  }
  if (system_output.empty()) {
    throw Error(ErrorKind::kDivisionByZero, "nothing to evaluate");
  }

  EvalReport report;
  report.total = system_output.size();

  std::uint64_t translit_total = 0, translit_correct = 0;
  std::uint64_t translate_total = 0, translate_correct = 0;

  for (std::size_t i = 0; i < system_output.size(); ++i) {
    const bool match = text::nfc(system_output[i]) == text::nfc(gold[i]);
    if (match) ++report.correct;
    if (tags != nullptr) {
      TagBreakdown& breakdown = report.per_tag[(*tags)[i]];
      ++breakdown.total;
      if (match) ++breakdown.correct;
      if (route((*tags)[i]) == Route::kTransliterate) {
        ++translit_total;
        if (match) ++translit_correct;
      } else {
        ++translate_total;
        if (match) ++translate_correct;
      }
    }
  }

  report.accuracy_pct = accuracy(report.correct, report.total);
  report.precision_pct = precision(report.correct, report.total);
  // Every gold item is a usable reference here, so the recall
  // denominator equals the total and recall coincides with precision.
  report.recall_pct = recall(report.correct, report.total);
  report.f_measure_pct = f_measure(report.precision_pct, report.recall_pct);

  for (auto& [tag, breakdown] : report.per_tag) {
    breakdown.accuracy_pct =
        breakdown.total == 0 ? 0.0
                             : accuracy(breakdown.correct, breakdown.total);
  }
  if (translit_total > 0) {
    report.transliteration_accuracy_pct =
        accuracy(translit_correct, translit_total);
  }
  if (translate_total > 0) {
    report.translation_accuracy_pct =
        accuracy(translate_correct, translate_total);
  }
  if (report.transliteration_accuracy_pct && report.translation_accuracy_pct) {
    report.macro_average_pct = (*report.transliteration_accuracy_pct +
                                *report.translation_accuracy_pct) /
                               2.0;
  }
  return report;
}

namespace {

std::string fmt2(double value, Rounding rounding) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(2) << round_pct(value, rounding);
  return out.str();
}

}  // namespace

std::string render_report(const EvalReport& report, Rounding rounding) {
  std::ostringstream out;
  out << "evaluation results\n";
  out << "------------------------------------------\n";
  out << "  items evaluated   " << report.total << "\n";
  out << "  exact matches     " << report.correct << "\n";
  out << "  accuracy (%)      " << fmt2(report.accuracy_pct, rounding) << "\n";
  out << "  precision (%)     " << fmt2(report.precision_pct, rounding)
      << "\n";
  out << "  recall (%)        " << fmt2(report.recall_pct, rounding) << "\n";
  out << "  f-measure (%)     " << fmt2(report.f_measure_pct, rounding)
      << "\n";

  if (!report.per_tag.empty()) {
    out << "\n  per tag                correct/total   accuracy (%)\n";
    for (const auto& [tag, breakdown] : report.per_tag) {
      std::ostringstream ratio;
      ratio << breakdown.correct << "/" << breakdown.total;
      out << "  " << std::left << std::setw(22) << to_string(tag)
          << std::right << std::setw(14) << ratio.str() << "   "
          << fmt2(breakdown.accuracy_pct, rounding) << "\n";
    }
  }
  if (report.transliteration_accuracy_pct) {
    out << "\n  transliteration set (PERSON, MISC) accuracy: "
        << fmt2(*report.transliteration_accuracy_pct, rounding) << "\n";
  }
  if (report.translation_accuracy_pct) {
    out << "  translation set (LOCATION, ORG) accuracy:    "
        << fmt2(*report.translation_accuracy_pct, rounding) << "\n";
  }
  if (report.macro_average_pct) {
    out << "  average accuracy:                            "
        << fmt2(*report.macro_average_pct, rounding) << "\n";
  }

  out << "\n";
  out << "total=" << report.total << "\n";
  out << "correct=" << report.correct << "\n";
  out << "accuracy_pct=" << fmt2(report.accuracy_pct, rounding) << "\n";
  out << "precision_pct=" << fmt2(report.precision_pct, rounding) << "\n";
  out << "recall_pct=" << fmt2(report.recall_pct, rounding) << "\n";
  out << "f_measure_pct=" << fmt2(report.f_measure_pct, rounding) << "\n";
  for (const auto& [tag, breakdown] : report.per_tag) {
    std::string name = text::ascii_lower(to_string(tag));
    out << name << "_total=" << breakdown.total << "\n";
    out << name << "_correct=" << breakdown.correct << "\n";
    out << name << "_accuracy_pct=" << fmt2(breakdown.accuracy_pct, rounding)
        << "\n";
  }
  if (report.transliteration_accuracy_pct) {
    out << "transliteration_accuracy_pct="
        << fmt2(*report.transliteration_accuracy_pct, rounding) << "\n";
  }
  if (report.translation_accuracy_pct) {
    out << "translation_accuracy_pct="
        << fmt2(*report.translation_accuracy_pct, rounding) << "\n";
  }
  if (report.macro_average_pct) {
    out << "macro_average_pct=" << fmt2(*report.macro_average_pct, rounding)
        << "\n";
  }
  return out.str();
}

}  // namespace netranslit
