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

#include "legalpipe/corpus.h"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "legalpipe/errors.h"
#include "legalpipe/text.h"
#include "json_records.h"

namespace legalpipe {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;
using internal::WriteRecordArray;

constexpr std::array<std::string_view, kNumEntityLabels> kLabelNames = {
    "COURT",  "PETITIONER", "RESPONDENT", "JUDGE",    "LAWYER",
    "STATUTE", "PRECEDENT", "GPE",        "OTHER_PERSON", "DATE",
    "PROVISION", "CASE_NUMBER", "ORG",    "WITNESS",
};

constexpr std::array<EntityLabel, 5> kPreambleLabels = {
    EntityLabel::kCourt, EntityLabel::kPetitioner, EntityLabel::kLawyer,
    EntityLabel::kRespondent, EntityLabel::kJudge,
};

constexpr std::array<EntityLabel, 13> kJudgmentLabels = {
    EntityLabel::kStatute,     EntityLabel::kPrecedent, EntityLabel::kJudge,
    EntityLabel::kGpe,         EntityLabel::kOtherPerson, EntityLabel::kDate,
    EntityLabel::kProvision,   EntityLabel::kCaseNumber, EntityLabel::kCourt,
    EntityLabel::kOrg,         EntityLabel::kPetitioner, EntityLabel::kWitness,
    EntityLabel::kRespondent,
};

std::string RecordLocus(std::string_view source, std::size_t index,
                        const std::string& id) {
  std::string locus = std::string(source) + ": record " + std::to_string(index);
  if (!id.empty()) locus += " (id \"" + id + "\")";
  return locus;
}

json ParseJson(const std::string& content, std::string_view source) {
  try {
    return json::parse(content);
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points at the offending character.
    const std::size_t byte = std::min<std::size_t>(e.byte, content.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < byte; ++i) {
      if (content[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(std::string(source) + ":" + std::to_string(line) + ":" +
                     std::to_string(column) + ": malformed JSON: " + e.what());
  }
}

std::size_t RequireOffset(const json& value, const char* field,
                          const std::string& locus) {
  if (!value.is_number_integer()) {
    throw ParseError(locus + ": annotation field \"" + field +
                     "\" must be an integer");
  }
  const auto offset = value.get<long long>();
  if (offset < 0) {
    throw ValidationError(locus + ": negative " + field + " offset " +
                          std::to_string(offset));
  }
  return static_cast<std::size_t>(offset);
}

EntitySpan ParseAnnotation(const json& ann, Section section,
                           const std::string& locus) {
  if (!ann.is_object()) throw ParseError(locus + ": annotation is not an object");
  // Label Studio stores the payload under "value" with a "labels" list.
  const json& body = ann.contains("value") ? ann.at("value") : ann;
  if (!body.contains("start") || !body.contains("end")) {
    throw ParseError(locus + ": annotation without start/end");
  }
  std::string label_name;
  if (body.contains("label") && body.at("label").is_string()) {
    label_name = body.at("label").get<std::string>();
  } else if (body.contains("labels") && body.at("labels").is_array() &&
             body.at("labels").size() == 1 &&
             body.at("labels").front().is_string()) {
    label_name = body.at("labels").front().get<std::string>();
  } else {
    throw ParseError(locus + ": annotation without a string label");
  }
  const auto label = ParseLabel(label_name);
  if (!label) {
    throw ValidationError(locus + ": unknown label \"" + label_name + "\"");
  }
  if (!InTaxonomy(section, *label)) {
    throw ValidationError(locus + ": label " + label_name +
                          " is not part of the " +
                          std::string(SectionName(section)) + " taxonomy");
  }
  return EntitySpan{RequireOffset(body.at("start"), "start", locus),
                    RequireOffset(body.at("end"), "end", locus), *label};
}

std::string RequireString(const json& record, const char* field,
                          const std::string& locus) {
  auto it = record.find(field);
  if (it == record.end() || !it->is_string()) {
    throw ParseError(locus + ": missing string field \"" + field + "\"");
  }
  return it->get<std::string>();
}

std::string ReadAll(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

}  // namespace

std::string_view SectionName(Section section) {
  return section == Section::kPreamble ? "preamble" : "judgment";
}

std::optional<Section> ParseSection(std::string_view name) {
  if (name == "preamble") return Section::kPreamble;
  if (name == "judgment" || name == "judgement") return Section::kJudgment;
  return std::nullopt;
}

std::string_view LabelName(EntityLabel label) {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<EntityLabel> ParseLabel(std::string_view name) {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == name) return static_cast<EntityLabel>(i);
  }
  return std::nullopt;
}

std::span<const EntityLabel> Taxonomy(Section section) {
  if (section == Section::kPreamble) return kPreambleLabels;
  return kJudgmentLabels;
}

bool InTaxonomy(Section section, EntityLabel label) {
  const auto labels = Taxonomy(section);
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

std::string FormatSpan(const EntitySpan& span) {
  return "(" + std::to_string(span.start) + "," + std::to_string(span.end) +
         "," + std::string(LabelName(span.label)) + ")";
}

void ValidateDocument(const AnnotatedDocument& doc) {
  const std::size_t length = CodepointLength(doc.text);
  std::vector<EntitySpan> sorted = doc.spans;
  for (const EntitySpan& span : sorted) {
    if (span.start >= span.end || span.end > length) {
      throw ValidationError("document \"" + doc.id + "\": span " +
                            FormatSpan(span) + " out of bounds for text of " +
                            std::to_string(length) + " characters");
    }
    if (!InTaxonomy(doc.section, span.label)) {
      throw ValidationError("document \"" + doc.id + "\": span " +
                            FormatSpan(span) + " has label outside the " +
                            std::string(SectionName(doc.section)) +
                            " taxonomy");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) {
    throw ValidationError("document \"" + doc.id + "\": duplicate span " +
                          FormatSpan(*dup));
  }
}

const std::vector<EntitySpan>* PredictionSet::Find(
    std::string_view doc_id) const {
  for (const DocumentSpans& doc : documents) {
    if (doc.doc_id == doc_id) return &doc.spans;
  }
  return nullptr;
}

PredictionSet ToPredictionSet(std::string model_id,
                              std::span<const AnnotatedDocument> docs) {
  PredictionSet set{std::move(model_id), {}};
  set.documents.reserve(docs.size());
  for (const AnnotatedDocument& doc : docs) {
    set.documents.push_back({doc.id, doc.spans});
  }
  return set;
}

CorpusStats ComputeCorpusStats(std::span<const AnnotatedDocument> docs) {
  CorpusStats stats;
  stats.documents = docs.size();
  for (const AnnotatedDocument& doc : docs) {
    stats.sentences += CountSentences(DecodeUtf8(doc.text));
    for (const EntitySpan& span : doc.spans) {
      ++stats.label_counts[static_cast<std::size_t>(span.label)];
      ++stats.total_spans;
    }
  }
  return stats;
}

std::vector<AnnotatedDocument> LoadNerCorpus(std::istream& in, Section section,
                                             std::string_view source) {
  const std::string content = ReadAll(in);
  const json root = ParseJson(content, source);
  if (!root.is_array()) {
    throw ParseError(std::string(source) + ": top level must be an array");
  }
  std::vector<AnnotatedDocument> docs;
  docs.reserve(root.size());
  std::unordered_set<std::string> ids;
  for (std::size_t index = 0; index < root.size(); ++index) {
    const json& record = root[index];
    std::string locus = RecordLocus(source, index, "");
    if (!record.is_object()) throw ParseError(locus + ": not an object");

    AnnotatedDocument doc;
    doc.section = section;
    auto id_it = record.find("id");
    if (id_it == record.end()) throw ParseError(locus + ": missing \"id\"");
    if (id_it->is_string()) {
      doc.id = id_it->get<std::string>();
    } else if (id_it->is_number_integer()) {
      doc.id = std::to_string(id_it->get<long long>());
    } else {
      throw ParseError(locus + ": \"id\" must be a string");
    }
    locus = RecordLocus(source, index, doc.id);

    auto data_it = record.find("data");
    if (data_it == record.end() || !data_it->is_object()) {
      throw ParseError(locus + ": missing object field \"data\"");
    }
    doc.text = RequireString(*data_it, "text", locus);
    try {
      (void)DecodeUtf8(doc.text);
    } catch (const ParseError& e) {
      throw ParseError(locus + ": " + e.what());
    }

    auto ann_it = record.find("annotations");
    if (ann_it != record.end() && !ann_it->is_null()) {
      if (!ann_it->is_array()) {
        throw ParseError(locus + ": \"annotations\" must be an array");
      }
      for (const json& ann : *ann_it) {
        if (ann.is_object() && ann.contains("result")) {
          const json& results = ann.at("result");
          if (!results.is_array()) {
            throw ParseError(locus + ": \"result\" must be an array");
          }
          for (const json& r : results) {
            doc.spans.push_back(ParseAnnotation(r, section, locus));
          }
        } else {
          doc.spans.push_back(ParseAnnotation(ann, section, locus));
        }
      }
    }

    try {
      ValidateDocument(doc);
    } catch (const ValidationError& e) {
      throw ValidationError(locus + ": " + e.what());
    }
    if (!ids.insert(doc.id).second) {
      throw ValidationError(locus + ": duplicate document id");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<AnnotatedDocument> LoadNerCorpusFile(
    const std::filesystem::path& path, Section section) {
  std::istringstream in(ReadFileToString(path));
  return LoadNerCorpus(in, section, path.string());
}

void WriteNerCorpus(std::span<const AnnotatedDocument> docs,
                    std::ostream& out) {
  std::vector<ordered_json> records;
  records.reserve(docs.size());
  for (const AnnotatedDocument& doc : docs) {
    std::vector<EntitySpan> spans = doc.spans;
    std::sort(spans.begin(), spans.end());
    ordered_json annotations = ordered_json::array();
    for (const EntitySpan& span : spans) {
      annotations.push_back({{"start", span.start},
                             {"end", span.end},
                             {"label", LabelName(span.label)}});
    }
    records.push_back({{"id", doc.id},
                       {"data", {{"text", doc.text}}},
                       {"annotations", std::move(annotations)}});
  }
  WriteRecordArray(records, out);
}

std::vector<DecisionDocument> LoadDecisionCorpus(std::istream& in,
                                                 std::string_view source) {
  const std::string content = ReadAll(in);
  const json root = ParseJson(content, source);
  if (!root.is_array()) {
    throw ParseError(std::string(source) + ": top level must be an array");
  }
  std::vector<DecisionDocument> docs;
  docs.reserve(root.size());
  std::unordered_set<std::string> ids;
  for (std::size_t index = 0; index < root.size(); ++index) {
    const json& record = root[index];
    std::string locus = RecordLocus(source, index, "");
    if (!record.is_object()) throw ParseError(locus + ": not an object");
    DecisionDocument doc;
    doc.id = RequireString(record, "id", locus);
    locus = RecordLocus(source, index, doc.id);
    doc.text = RequireString(record, "text", locus);
    try {
      (void)DecodeUtf8(doc.text);
    } catch (const ParseError& e) {
      throw ParseError(locus + ": " + e.what());
    }
    auto label_it = record.find("label");
    if (label_it != record.end() && !label_it->is_null()) {
      if (!label_it->is_number_integer() ||
          (label_it->get<long long>() != 0 && label_it->get<long long>() != 1)) {
        throw ValidationError(locus + ": label must be 0, 1 or null");
      }
      doc.label = static_cast<Decision>(label_it->get<int>());
    }
    if (!ids.insert(doc.id).second) {
      throw ValidationError(locus + ": duplicate document id");
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::vector<DecisionDocument> LoadDecisionCorpusFile(
    const std::filesystem::path& path) {
  std::istringstream in(ReadFileToString(path));
  return LoadDecisionCorpus(in, path.string());
}

void WriteDecisionCorpus(std::span<const DecisionDocument> docs,
                         std::ostream& out) {
  std::vector<ordered_json> records;
  records.reserve(docs.size());
  for (const DecisionDocument& doc : docs) {
    ordered_json label = nullptr;
    if (doc.label) label = static_cast<int>(*doc.label);
    records.push_back({{"id", doc.id}, {"text", doc.text}, {"label", label}});
  }
  WriteRecordArray(records, out);
}

std::string ReadFileToString(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return ReadAll(in);
}

}  // namespace legalpipe
