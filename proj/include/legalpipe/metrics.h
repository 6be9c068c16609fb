// Copyright 2026 The LegalPipe Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Evaluation: strict-match NER scores, binary macro-F1 and ROUGE-2.
//
// All scores are fractions in [0, 1]. The table formatters print NER scores
// multiplied by 100 and ROUGE scores as raw fractions.

#ifndef LEGALPIPE_METRICS_H_
#define LEGALPIPE_METRICS_H_

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legalpipe/corpus.h"

namespace legalpipe {

// 2PR / (P + R), or 0 when P + R == 0.
double HarmonicF1(double precision, double recall);

struct LabelScore {
  EntityLabel label = EntityLabel::kCourt;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold spans
  std::size_t true_positives = 0;
  std::size_t false_positives = 0;
  std::size_t false_negatives = 0;
};

struct NerEvalReport {
  // Every label that occurs in gold or predictions, in EntityLabel order.
  std::vector<LabelScore> labels;
  // Support-weighted averages over the rows above.
  double weighted_precision = 0.0;
  double weighted_recall = 0.0;
  double weighted_f1 = 0.0;
  std::size_t total_support = 0;

  const LabelScore* Find(EntityLabel label) const;
};

// A prediction is correct iff an unmatched gold span in the same document has
// the same start, end and label. Gold documents missing from `pred` count as
// having no predictions; predicted documents absent from gold are ignored.
NerEvalReport EvaluateNer(std::span<const AnnotatedDocument> gold,
                          const PredictionSet& pred);

std::string FormatNerReport(const NerEvalReport& report);

struct ClassScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;
  std::size_t predicted = 0;
};

struct BinaryReport {
  std::array<ClassScore, 2> classes;  // indexed by Decision value
  double macro_f1 = 0.0;
  double accuracy = 0.0;
  std::size_t count = 0;
};

// Throws ValidationError on a length mismatch and ParameterError on empty
// input. A class absent from both lists scores F1 = 0 and is reported
// through `warnings` when non-null.
BinaryReport EvaluateBinary(std::span<const Decision> gold,
                            std::span<const Decision> pred,
                            std::vector<std::string>* warnings = nullptr);

double MacroF1(std::span<const Decision> gold, std::span<const Decision> pred,
               std::vector<std::string>* warnings = nullptr);

std::string FormatBinaryReport(const BinaryReport& report);

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Lowercased, whitespace-split bigram overlap. Each bigram counts at most
// min(candidate count, reference count) times. A side with fewer than two
// tokens has no bigrams and its score is 0.
RougeScore Rouge2(std::string_view candidate, std::string_view reference);

// Arithmetic means of per-pair precision, recall and F1. Throws
// ParameterError on an empty list.
RougeScore Rouge2Corpus(
    std::span<const std::pair<std::string, std::string>> pairs);

}  // namespace legalpipe

#endif  // LEGALPIPE_METRICS_H_
