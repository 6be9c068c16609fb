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

#include "legalpipe/metrics.h"

#include <algorithm>
#include <cstdio>
#include <unordered_map>

#include "legalpipe/errors.h"
#include "legalpipe/text.h"

namespace legalpipe {

namespace {

double Ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::string FormatRow(std::string_view name, double p, double r, double f,
                      std::size_t support, double scale, int precision) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16.*s %10.*f %10.*f %10.*f %10zu\n",
                static_cast<int>(name.size()), name.data(), precision, p * scale,
                precision, r * scale, precision, f * scale, support);
  return buf;
}

std::string Header() {
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-16s %10s %10s %10s %10s\n", "label",
                "precision", "recall", "f1", "support");
  return buf;
}

// Bigram counts keyed by "w1 U+001F w2"; U+001F is whitespace, so it never
// occurs inside a token.
std::unordered_map<std::u32string, std::size_t> Bigrams(std::string_view utf8,
                                                        std::size_t* total) {
  std::vector<std::u32string> tokens;
  std::u32string current;
  for (char32_t c : DecodeUtf8(utf8)) {
    if (IsSpace(c)) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ToLowerAscii(c));
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));

  std::unordered_map<std::u32string, std::size_t> counts;
  *total = tokens.size() < 2 ? 0 : tokens.size() - 1;
  for (std::size_t i = 0; i + 1 < tokens.size(); ++i) {
    ++counts[tokens[i] + U'\x1F' + tokens[i + 1]];
  }
  return counts;
}

}  // namespace

double HarmonicF1(double precision, double recall) {
  const double sum = precision + recall;
  return sum > 0.0 ? 2.0 * precision * recall / sum : 0.0;
}

const LabelScore* NerEvalReport::Find(EntityLabel label) const {
  for (const LabelScore& row : labels) {
    if (row.label == label) return &row;
  }
  return nullptr;
}

NerEvalReport EvaluateNer(std::span<const AnnotatedDocument> gold,
                          const PredictionSet& pred) {
  std::array<std::size_t, kNumEntityLabels> tp{}, gold_count{}, pred_count{};
  for (const AnnotatedDocument& doc : gold) {
    std::vector<EntitySpan> g = doc.spans;
    std::vector<EntitySpan> p;
    if (const auto* found = pred.Find(doc.id)) p = *found;
    std::sort(g.begin(), g.end());
    std::sort(p.begin(), p.end());
    for (const EntitySpan& s : g) ++gold_count[static_cast<std::size_t>(s.label)];
    for (const EntitySpan& s : p) ++pred_count[static_cast<std::size_t>(s.label)];
    // Sorted merge pairs each gold span with at most one identical prediction.
    std::size_t i = 0, j = 0;
    while (i < g.size() && j < p.size()) {
      if (g[i] < p[j]) {
        ++i;
      } else if (p[j] < g[i]) {
        ++j;
      } else {
        ++tp[static_cast<std::size_t>(g[i].label)];
        ++i;
        ++j;
      }
    }
  }

  NerEvalReport report;
  double wp = 0.0, wr = 0.0, wf = 0.0;
  for (std::size_t k = 0; k < kNumEntityLabels; ++k) {
    if (gold_count[k] == 0 && pred_count[k] == 0) continue;
    LabelScore row;
    row.label = static_cast<EntityLabel>(k);
    row.true_positives = tp[k];
    row.false_positives = pred_count[k] - tp[k];
    row.false_negatives = gold_count[k] - tp[k];
    row.support = gold_count[k];
    row.precision = Ratio(tp[k], pred_count[k]);
    row.recall = Ratio(tp[k], gold_count[k]);
    row.f1 = HarmonicF1(row.precision, row.recall);
    report.total_support += row.support;
    const auto weight = static_cast<double>(row.support);
    wp += row.precision * weight;
    wr += row.recall * weight;
    wf += row.f1 * weight;
    report.labels.push_back(row);
  }
  if (report.total_support > 0) {
    const auto total = static_cast<double>(report.total_support);
    report.weighted_precision = wp / total;
    report.weighted_recall = wr / total;
    report.weighted_f1 = wf / total;
  }
  return report;
}

std::string FormatNerReport(const NerEvalReport& report) {
  std::string out = Header();
  for (const LabelScore& row : report.labels) {
    out += FormatRow(LabelName(row.label), row.precision, row.recall, row.f1,
                     row.support, 100.0, 2);
  }
  out += FormatRow("weighted avg", report.weighted_precision,
                   report.weighted_recall, report.weighted_f1,
                   report.total_support, 100.0, 2);
  return out;
}

BinaryReport EvaluateBinary(std::span<const Decision> gold,
                            std::span<const Decision> pred,
                            std::vector<std::string>* warnings) {
  if (gold.size() != pred.size()) {
    throw ValidationError("gold has " + std::to_string(gold.size()) +
                          " labels but predictions have " +
                          std::to_string(pred.size()));
  }
  if (gold.empty()) throw ParameterError("macro-F1 needs at least one label");

  BinaryReport report;
  report.count = gold.size();
  std::array<std::size_t, 2> tp{};
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto g = static_cast<std::size_t>(gold[i]);
    const auto p = static_cast<std::size_t>(pred[i]);
    ++report.classes[g].support;
    ++report.classes[p].predicted;
    if (g == p) {
      ++tp[g];
      ++correct;
    }
  }
  for (std::size_t c = 0; c < 2; ++c) {
    ClassScore& score = report.classes[c];
    if (score.support == 0 && score.predicted == 0 && warnings) {
      warnings->push_back("class " + std::to_string(c) +
                          " occurs in neither gold nor predictions; its F1 is 0");
    }
    score.precision = Ratio(tp[c], score.predicted);
    score.recall = Ratio(tp[c], score.support);
    score.f1 = HarmonicF1(score.precision, score.recall);
  }
  report.macro_f1 = (report.classes[0].f1 + report.classes[1].f1) / 2.0;
  report.accuracy = Ratio(correct, report.count);
  return report;
}

double MacroF1(std::span<const Decision> gold, std::span<const Decision> pred,
               std::vector<std::string>* warnings) {
  return EvaluateBinary(gold, pred, warnings).macro_f1;
}

std::string FormatBinaryReport(const BinaryReport& report) {
  std::string out = Header();
  out += FormatRow("rejected (0)", report.classes[0].precision,
                   report.classes[0].recall, report.classes[0].f1,
                   report.classes[0].support, 1.0, 4);
  out += FormatRow("accepted (1)", report.classes[1].precision,
                   report.classes[1].recall, report.classes[1].f1,
                   report.classes[1].support, 1.0, 4);
  char buf[128];
  std::snprintf(buf, sizeof(buf), "macro F1 %.4f  accuracy %.4f  n %zu\n",
                report.macro_f1, report.accuracy, report.count);
  return out + buf;
}

RougeScore Rouge2(std::string_view candidate, std::string_view reference) {
  std::size_t cand_total = 0, ref_total = 0;
  const auto cand = Bigrams(candidate, &cand_total);
  const auto ref = Bigrams(reference, &ref_total);
  std::size_t overlap = 0;
  for (const auto& [bigram, count] : cand) {
    auto it = ref.find(bigram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  RougeScore score;
  score.precision = Ratio(overlap, cand_total);
  score.recall = Ratio(overlap, ref_total);
  score.f1 = HarmonicF1(score.precision, score.recall);
  return score;
}

RougeScore Rouge2Corpus(
    std::span<const std::pair<std::string, std::string>> pairs) {
  if (pairs.empty()) throw ParameterError("ROUGE-2 corpus needs at least one pair");
  RougeScore mean;
  for (const auto& [candidate, reference] : pairs) {
    const RougeScore s = Rouge2(candidate, reference);
    mean.precision += s.precision;
    mean.recall += s.recall;
    mean.f1 += s.f1;
  }
  const auto n = static_cast<double>(pairs.size());
  mean.precision /= n;
  mean.recall /= n;
  mean.f1 /= n;
  return mean;
}

}  // namespace legalpipe
