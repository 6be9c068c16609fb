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

// Domain types for annotated legal corpora and their file codecs.
//
// NER-JSON corpus file (UTF-8, offsets in code points):
//
//   [{"id": "d1", "data": {"text": "..."},
//     "annotations": [{"start": 0, "end": 3, "label": "COURT"}]}, ...]
//
// Prediction files use the same schema. The nested Label Studio layout of the
// official release ("annotations": [{"result": [{"value": {"start", "end",
// "labels": [..]}}]}]) is accepted on input as well. Unknown fields are
// ignored.
//
// Decision corpus file:
//
//   [{"id": "d1", "text": "...", "label": 0 | 1 | null}, ...]

#ifndef LEGALPIPE_CORPUS_H_
#define LEGALPIPE_CORPUS_H_

#include <array>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace legalpipe {

enum class Section { kPreamble, kJudgment };

std::string_view SectionName(Section section);
std::optional<Section> ParseSection(std::string_view name);

// Union of the preamble and judgment taxonomies.
enum class EntityLabel {
  kCourt,
  kPetitioner,
  kRespondent,
  kJudge,
  kLawyer,
  kStatute,
  kPrecedent,
  kGpe,
  kOtherPerson,
  kDate,
  kProvision,
  kCaseNumber,
  kOrg,
  kWitness,
};

inline constexpr std::size_t kNumEntityLabels = 14;

std::string_view LabelName(EntityLabel label);
std::optional<EntityLabel> ParseLabel(std::string_view name);

// Labels in reporting order for a section: 5 for the preamble, 13 for the
// judgment.
std::span<const EntityLabel> Taxonomy(Section section);
bool InTaxonomy(Section section, EntityLabel label);

// Half-open interval [start, end) of code points plus a label. The default
// ordering (start, end, label) is the canonical output order.
struct EntitySpan {
  std::size_t start = 0;
  std::size_t end = 0;
  EntityLabel label = EntityLabel::kCourt;

  auto operator<=>(const EntitySpan&) const = default;
};

// True iff the half-open intervals share at least one position.
inline bool Overlaps(const EntitySpan& a, const EntitySpan& b) {
  return a.start < b.end && b.start < a.end;
}

std::string FormatSpan(const EntitySpan& span);

struct AnnotatedDocument {
  std::string id;
  std::string text;  // UTF-8
  Section section = Section::kJudgment;
  std::vector<EntitySpan> spans;

  bool operator==(const AnnotatedDocument&) const = default;
};

// Throws ValidationError when a span is out of bounds, empty, outside the
// section taxonomy, or duplicated.
void ValidateDocument(const AnnotatedDocument& doc);

enum class Decision { kRejected = 0, kAccepted = 1 };

struct DecisionDocument {
  std::string id;
  std::string text;
  std::optional<Decision> label;

  bool operator==(const DecisionDocument&) const = default;
};

// Predicted spans of one model, grouped per document in file order.
struct DocumentSpans {
  std::string doc_id;
  std::vector<EntitySpan> spans;

  bool operator==(const DocumentSpans&) const = default;
};

struct PredictionSet {
  std::string model_id;
  std::vector<DocumentSpans> documents;

  // Spans for a document, or nullptr when the document is absent.
  const std::vector<EntitySpan>* Find(std::string_view doc_id) const;
};

PredictionSet ToPredictionSet(std::string model_id,
                              std::span<const AnnotatedDocument> docs);

struct CorpusStats {
  std::array<std::size_t, kNumEntityLabels> label_counts{};
  std::size_t documents = 0;
  std::size_t sentences = 0;
  std::size_t total_spans = 0;

  std::size_t count(EntityLabel label) const {
    return label_counts[static_cast<std::size_t>(label)];
  }
};

CorpusStats ComputeCorpusStats(std::span<const AnnotatedDocument> docs);

// Reads a NER-JSON corpus. Every record is validated; ParseError carries the
// line number for malformed JSON and the record index for schema errors,
// ValidationError names the document id and offending span.
std::vector<AnnotatedDocument> LoadNerCorpus(std::istream& in, Section section,
                                             std::string_view source = "<input>");
std::vector<AnnotatedDocument> LoadNerCorpusFile(
    const std::filesystem::path& path, Section section);

// One record per line, spans in canonical order. Output is byte-stable.
void WriteNerCorpus(std::span<const AnnotatedDocument> docs, std::ostream& out);

std::vector<DecisionDocument> LoadDecisionCorpus(
    std::istream& in, std::string_view source = "<input>");
std::vector<DecisionDocument> LoadDecisionCorpusFile(
    const std::filesystem::path& path);
void WriteDecisionCorpus(std::span<const DecisionDocument> docs,
                         std::ostream& out);

// Whole stream as a string; throws Error if the file cannot be opened.
std::string ReadFileToString(const std::filesystem::path& path);

}  // namespace legalpipe

#endif  // LEGALPIPE_CORPUS_H_
