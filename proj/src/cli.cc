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

#include "legalpipe/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <map>
#include <sstream>
#include <unordered_map>

#include "CLI11.hpp"
#include "json.hpp"
#include "json_records.h"
#include "legalpipe/chunking.h"
#include "legalpipe/corpus.h"
#include "legalpipe/errors.h"
#include "legalpipe/fusion.h"
#include "legalpipe/judgment.h"
#include "legalpipe/metrics.h"
#include "legalpipe/normalize.h"
#include "legalpipe/parallel.h"
#include "legalpipe/seqlabel.h"
#include "legalpipe/text.h"

namespace legalpipe::cli {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

struct Options {
  std::size_t jobs = 1;
  std::string section = "judgment";
  std::string output = "-";

  std::string input;
  std::string second_input;
  std::string text_path;
  std::string gold;
  std::string pred;
  std::string candidates;
  std::string references;
  std::string lexicon;
  std::vector<std::string> splits;

  std::string bio_tokenize = "punct";
  std::string window_tokenize = "whitespace";
  bool strict = false;
  std::string priority = "first";
  std::size_t chunk_len = kDefaultChunkLength;
  std::size_t overlap = kDefaultChunkOverlap;
  std::size_t max_tokens = kDefaultMaxTokens;
  std::size_t tail_n = kDefaultTailTokens;
  std::size_t n_words = 300;
  bool sweep = false;
  std::string policy = "latest";
  bool json = false;
};

// Raised for parameter combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string SourceName(const std::string& path) {
  return path == "-" ? "<stdin>" : path;
}

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in),
                       std::istreambuf_iterator<char>());
  }
  return ReadFileToString(path);
}

void WriteOutput(const std::string& path, const std::string& content,
                 std::ostream& out) {
  if (path == "-") {
    out << content;
    out.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + path + " for writing");
  file << content;
  file.flush();
  if (!file) throw Error("write to " + path + " failed");
}

Section ToSection(const std::string& name) {
  // CLI11 already restricted the value set.
  return *ParseSection(name);
}

TokenizeMode ToTokenizeMode(const std::string& name) {
  return name == "whitespace" ? TokenizeMode::kWhitespace
                              : TokenizeMode::kPunctSplit;
}

std::vector<AnnotatedDocument> LoadNer(const std::string& path,
                                       const std::string& section,
                                       std::istream& in) {
  std::istringstream stream(ReadInput(path, in));
  return LoadNerCorpus(stream, ToSection(section), SourceName(path));
}

std::vector<DecisionDocument> LoadDecisions(const std::string& path,
                                            std::istream& in) {
  std::istringstream stream(ReadInput(path, in));
  return LoadDecisionCorpus(stream, SourceName(path));
}

// Array of objects with at least a string "id".
json LoadRecords(const std::string& path, std::istream& in) {
  const std::string content = ReadInput(path, in);
  json root;
  try {
    root = json::parse(content);
  } catch (const json::parse_error& e) {
    throw ParseError(SourceName(path) + ": malformed JSON: " + e.what());
  }
  if (!root.is_array()) {
    throw ParseError(SourceName(path) + ": top level must be an array");
  }
  for (std::size_t i = 0; i < root.size(); ++i) {
    if (!root[i].is_object() || !root[i].contains("id") ||
        !root[i].at("id").is_string()) {
      throw ParseError(SourceName(path) + ": record " + std::to_string(i) +
                       ": missing string field \"id\"");
    }
  }
  return root;
}

std::string RecordText(const json& record, const std::string& path,
                       std::size_t index) {
  auto it = record.find("text");
  if (it == record.end() || !it->is_string()) {
    throw ParseError(SourceName(path) + ": record " + std::to_string(index) +
                     " (id \"" + record.at("id").get<std::string>() +
                     "\"): missing string field \"text\"");
  }
  return it->get<std::string>();
}

// Runs fn(i) per document in parallel; failures are reported with the input
// file name and the document id.
template <typename Fn>
auto MapDocuments(const std::string& path, const std::vector<std::string>& ids,
                  std::size_t jobs, Fn fn) {
  return ParallelMap(ids.size(), jobs, [&](std::size_t i) {
    try {
      return fn(i);
    } catch (const Error& e) {
      throw ValidationError(SourceName(path) + ": record " + std::to_string(i) +
                            " (id \"" + ids[i] + "\"): " + e.what());
    }
  });
}

template <typename Docs>
std::vector<std::string> IdsOf(const Docs& docs) {
  std::vector<std::string> ids;
  ids.reserve(docs.size());
  for (const auto& doc : docs) ids.push_back(doc.id);
  return ids;
}

std::string DumpRecords(const std::vector<ordered_json>& records) {
  std::ostringstream out;
  internal::WriteRecordArray(records, out);
  return out.str();
}

std::string Slice(const std::u32string& text, std::size_t start,
                  std::size_t end) {
  return EncodeUtf8(std::u32string_view(text).substr(start, end - start));
}

std::string CmdNormalize(const Options& o, std::istream& in) {
  const auto docs = LoadNer(o.input, o.section, in);
  const auto out = MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
    return RemapDocument(docs[i]);
  });
  std::ostringstream stream;
  WriteNerCorpus(out, stream);
  return stream.str();
}

std::string CmdBioEncode(const Options& o, std::istream& in) {
  const auto docs = LoadNer(o.input, o.section, in);
  const TokenizeMode mode = ToTokenizeMode(o.bio_tokenize);
  const auto sentences =
      MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
        const AnnotatedDocument& doc = docs[i];
        return ToConll(SpansToBio(Tokenize(doc.text, mode), doc.spans, o.strict),
                       doc.id);
      });
  std::ostringstream stream;
  WriteConll(sentences, stream);
  return stream.str();
}

std::string CmdBioDecode(const Options& o, std::istream& in) {
  std::istringstream conll_stream(ReadInput(o.input, in));
  std::vector<ConllSentence> sentences;
  try {
    sentences = ReadConll(conll_stream);
  } catch (const Error& e) {
    throw ParseError(SourceName(o.input) + ": " + e.what());
  }
  const auto texts = LoadNer(o.text_path, o.section, in);
  std::unordered_map<std::string, std::size_t> by_id;
  for (std::size_t i = 0; i < texts.size(); ++i) by_id.emplace(texts[i].id, i);

  std::vector<std::string> ids;
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    ids.push_back(sentences[i].id.empty() ? "#" + std::to_string(i)
                                          : sentences[i].id);
  }
  const Section section = ToSection(o.section);
  const auto docs = MapDocuments(o.input, ids, o.jobs, [&](std::size_t i) {
    const ConllSentence& sentence = sentences[i];
    std::size_t source = i;
    if (!sentence.id.empty()) {
      auto it = by_id.find(sentence.id);
      if (it == by_id.end()) {
        throw ValidationError("no document with this id in " +
                              SourceName(o.text_path));
      }
      source = it->second;
    } else if (i >= texts.size()) {
      throw ValidationError("more CoNLL blocks than documents in " +
                            SourceName(o.text_path));
    }
    AnnotatedDocument doc;
    doc.id = texts[source].id;
    doc.text = texts[source].text;
    doc.section = section;
    doc.spans = BioToSpans(AttachOffsets(sentence, doc.text), doc.text);
    ValidateDocument(doc);
    return doc;
  });
  std::ostringstream stream;
  WriteNerCorpus(docs, stream);
  return stream.str();
}

std::string CmdFuse(const Options& o, std::istream& in) {
  const auto a = LoadNer(o.input, o.section, in);
  const auto b = LoadNer(o.second_input, o.section, in);
  std::unordered_map<std::string, std::size_t> b_index;
  for (std::size_t i = 0; i < b.size(); ++i) b_index.emplace(b[i].id, i);

  // Output order: a's documents, then documents only present in b.
  struct Pair {
    const AnnotatedDocument* first;
    const AnnotatedDocument* second;
  };
  std::vector<Pair> pairs;
  std::vector<std::string> ids;
  std::unordered_map<std::string, bool> in_a;
  for (const AnnotatedDocument& doc : a) {
    auto it = b_index.find(doc.id);
    const AnnotatedDocument* other = it == b_index.end() ? nullptr : &b[it->second];
    if (other && other->text != doc.text) {
      throw ValidationError(SourceName(o.second_input) + ": document \"" +
                            doc.id + "\" has a different text than in " +
                            SourceName(o.input));
    }
    pairs.push_back({&doc, other});
    ids.push_back(doc.id);
    in_a[doc.id] = true;
  }
  for (const AnnotatedDocument& doc : b) {
    if (in_a.count(doc.id)) continue;
    pairs.push_back({nullptr, &doc});
    ids.push_back(doc.id);
  }

  FusionConfig config;
  config.priority =
      o.priority == "second" ? FusionPriority::kSecond : FusionPriority::kFirst;
  static const std::vector<EntitySpan> kEmpty;
  const auto fused = MapDocuments(o.input, ids, o.jobs, [&](std::size_t i) {
    const Pair& p = pairs[i];
    const AnnotatedDocument& base = p.first ? *p.first : *p.second;
    AnnotatedDocument doc{base.id, base.text, base.section, {}};
    doc.spans = FuseSpans(p.first ? p.first->spans : kEmpty,
                          p.second ? p.second->spans : kEmpty, config);
    return doc;
  });
  std::ostringstream stream;
  WriteNerCorpus(fused, stream);
  return stream.str();
}

std::string CmdChunk(const Options& o, std::istream& in) {
  const auto docs = LoadDecisions(o.input, in);
  const TokenizeMode mode = ToTokenizeMode(o.window_tokenize);
  const auto per_doc = MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
    const std::u32string text = DecodeUtf8(docs[i].text);
    const auto tokens = TruncateTokens(Tokenize(docs[i].text, mode), o.max_tokens);
    std::vector<ordered_json> records;
    for (const Chunk& chunk : ChunkTokens(tokens, o.chunk_len, o.overlap)) {
      records.push_back(
          {{"doc_id", docs[i].id},
           {"chunk_index", chunk.index},
           {"first", chunk.first},
           {"last", chunk.last},
           {"text", Slice(text, tokens[chunk.first].start,
                          tokens[chunk.last - 1].end)}});
    }
    return records;
  });
  std::vector<ordered_json> records;
  for (const auto& doc_records : per_doc) {
    records.insert(records.end(), doc_records.begin(), doc_records.end());
  }
  return DumpRecords(records);
}

std::string CmdTail(const Options& o, std::istream& in) {
  const auto docs = LoadDecisions(o.input, in);
  const TokenizeMode mode = ToTokenizeMode(o.window_tokenize);
  const auto records = MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
    const std::u32string text = DecodeUtf8(docs[i].text);
    const auto tokens = Tokenize(docs[i].text, mode);
    const auto tail = TailTokens(tokens, o.tail_n);
    return ordered_json{
        {"doc_id", docs[i].id},
        {"first", tokens.size() - tail.size()},
        {"last", tokens.size()},
        {"text", tail.empty() ? std::string()
                              : Slice(text, tail.front().start, tail.back().end)}};
  });
  return DumpRecords(records);
}

std::string CmdDecide(const Options& o, std::istream& in) {
  KeywordLexicon lexicon = KeywordLexicon::Default();
  if (!o.lexicon.empty()) {
    std::istringstream stream(ReadFileToString(o.lexicon));
    try {
      lexicon = KeywordLexicon::Load(stream);
    } catch (const Error& e) {
      throw ParseError(o.lexicon + ": " + e.what());
    }
  }
  const DecisionPolicy policy = o.policy == "majority"
                                    ? DecisionPolicy::kCountMajority
                                    : DecisionPolicy::kLatestMatch;
  const auto docs = LoadDecisions(o.input, in);
  const auto records = MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
    const DecisionResult result = DetectDecision(docs[i].text, lexicon, policy);
    ordered_json matches = ordered_json::array();
    for (const KeywordMatch& m : result.matches) {
      matches.push_back({{"phrase", m.phrase},
                         {"polarity", PolarityName(m.polarity)},
                         {"position", m.position}});
    }
    return ordered_json{{"id", docs[i].id},
                        {"label", static_cast<int>(result.label)},
                        {"evidence_found", result.evidence_found},
                        {"matches", std::move(matches)}};
  });
  return DumpRecords(records);
}

std::string CmdExplain(const Options& o, std::istream& in) {
  std::vector<std::size_t> lengths;
  if (o.sweep) {
    lengths.assign(kExplanationSweep.begin(), kExplanationSweep.end());
  } else {
    lengths.push_back(o.n_words);
  }
  const auto docs = LoadDecisions(o.input, in);
  const auto per_doc = MapDocuments(o.input, IdsOf(docs), o.jobs, [&](std::size_t i) {
    std::vector<ordered_json> records;
    for (std::size_t n : lengths) {
      const ExplanationResult r = ExtractExplanation(docs[i].text, n);
      records.push_back({{"id", docs[i].id},
                         {"n_words", r.n_words},
                         {"word_count_total", r.word_count_total},
                         {"start", r.start},
                         {"end", r.end},
                         {"text", r.text}});
    }
    return records;
  });
  std::vector<ordered_json> records;
  for (const auto& doc_records : per_doc) {
    records.insert(records.end(), doc_records.begin(), doc_records.end());
  }
  return DumpRecords(records);
}

std::string CmdEvalNer(const Options& o, std::istream& in) {
  const auto gold = LoadNer(o.gold, o.section, in);
  const auto pred = LoadNer(o.pred, o.section, in);
  const NerEvalReport report = EvaluateNer(gold, ToPredictionSet(o.pred, pred));
  if (!o.json) return FormatNerReport(report);
  std::vector<ordered_json> records;
  for (const LabelScore& row : report.labels) {
    records.push_back({{"label", LabelName(row.label)},
                       {"precision", row.precision},
                       {"recall", row.recall},
                       {"f1", row.f1},
                       {"support", row.support}});
  }
  records.push_back({{"label", "weighted avg"},
                     {"precision", report.weighted_precision},
                     {"recall", report.weighted_recall},
                     {"f1", report.weighted_f1},
                     {"support", report.total_support}});
  return DumpRecords(records);
}

std::string CmdEvalClf(const Options& o, std::istream& in,
                       std::ostream& err) {
  const auto gold_docs = LoadDecisions(o.gold, in);
  const json pred_records = LoadRecords(o.pred, in);
  std::unordered_map<std::string, Decision> predicted;
  for (std::size_t i = 0; i < pred_records.size(); ++i) {
    const json& r = pred_records[i];
    auto it = r.find("label");
    if (it == r.end() || !it->is_number_integer() ||
        (it->get<int>() != 0 && it->get<int>() != 1)) {
      throw ValidationError(SourceName(o.pred) + ": record " +
                            std::to_string(i) + ": label must be 0 or 1");
    }
    predicted[r.at("id").get<std::string>()] = static_cast<Decision>(it->get<int>());
  }
  std::vector<Decision> gold, pred;
  for (std::size_t i = 0; i < gold_docs.size(); ++i) {
    const DecisionDocument& doc = gold_docs[i];
    if (!doc.label) {
      throw ValidationError(SourceName(o.gold) + ": record " + std::to_string(i) +
                            " (id \"" + doc.id + "\"): gold label is null");
    }
    auto it = predicted.find(doc.id);
    if (it == predicted.end()) {
      throw ValidationError(SourceName(o.pred) + ": no prediction for id \"" +
                            doc.id + "\"");
    }
    gold.push_back(*doc.label);
    pred.push_back(it->second);
  }
  std::vector<std::string> warnings;
  const BinaryReport report = EvaluateBinary(gold, pred, &warnings);
  for (const std::string& w : warnings) err << "warning: " << w << '\n';
  if (!o.json) return FormatBinaryReport(report);
  std::vector<ordered_json> records;
  const char* names[2] = {"rejected", "accepted"};
  for (std::size_t c = 0; c < 2; ++c) {
    const ClassScore& s = report.classes[c];
    records.push_back({{"label", names[c]},
                       {"precision", s.precision},
                       {"recall", s.recall},
                       {"f1", s.f1},
                       {"support", s.support}});
  }
  records.push_back(
      {{"label", "macro avg"},
       {"precision", (report.classes[0].precision + report.classes[1].precision) / 2},
       {"recall", (report.classes[0].recall + report.classes[1].recall) / 2},
       {"f1", report.macro_f1},
       {"support", report.count}});
  return DumpRecords(records);
}

std::string CmdEvalRouge(const Options& o, std::istream& in) {
  const json references = LoadRecords(o.references, in);
  std::unordered_map<std::string, std::string> reference_text;
  for (std::size_t i = 0; i < references.size(); ++i) {
    reference_text[references[i].at("id").get<std::string>()] =
        RecordText(references[i], o.references, i);
  }
  const json candidates = LoadRecords(o.candidates, in);

  // Grouped by requested span length; 0 collects candidates without one.
  struct Group {
    std::vector<std::pair<std::string, std::string>> pairs;
    double coverage_sum = 0.0;
    bool has_coverage = true;
  };
  std::map<std::size_t, Group> groups;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const json& c = candidates[i];
    const std::string id = c.at("id").get<std::string>();
    auto ref = reference_text.find(id);
    if (ref == reference_text.end()) {
      throw ValidationError(SourceName(o.candidates) + ": record " +
                            std::to_string(i) + ": no reference for id \"" + id +
                            "\"");
    }
    std::size_t n = 0;
    if (c.contains("n_words") && c.at("n_words").is_number_unsigned()) {
      n = c.at("n_words").get<std::size_t>();
    }
    Group& group = groups[n];
    group.pairs.emplace_back(RecordText(c, o.candidates, i), ref->second);
    if (n > 0 && c.contains("word_count_total") &&
        c.at("word_count_total").is_number_unsigned()) {
      const auto words = c.at("word_count_total").get<std::size_t>();
      group.coverage_sum +=
          words == 0 ? 100.0
                     : 100.0 * static_cast<double>(std::min(n, words)) /
                           static_cast<double>(words);
    } else {
      group.has_coverage = false;
    }
  }
  if (groups.empty()) {
    throw ValidationError(SourceName(o.candidates) + ": no candidates");
  }

  std::vector<ordered_json> records;
  std::string table;
  char buf[160];
  std::snprintf(buf, sizeof(buf), "%-12s %10s %10s %10s %10s %8s\n",
                "span_words", "rouge2_f1", "precision", "recall", "coverage",
                "pairs");
  table += buf;
  for (const auto& [n, group] : groups) {
    const RougeScore score = Rouge2Corpus(group.pairs);
    const double coverage =
        group.coverage_sum / static_cast<double>(group.pairs.size());
    ordered_json record;
    record["n_words"] = n == 0 ? ordered_json(nullptr) : ordered_json(n);
    record["precision"] = score.precision;
    record["recall"] = score.recall;
    record["f1"] = score.f1;
    record["coverage"] =
        group.has_coverage ? ordered_json(coverage) : ordered_json(nullptr);
    record["pairs"] = group.pairs.size();
    records.push_back(std::move(record));

    const std::string label = n == 0 ? "all" : "last " + std::to_string(n);
    char cov[32] = "-";
    if (group.has_coverage) std::snprintf(cov, sizeof(cov), "%.2f", coverage);
    std::snprintf(buf, sizeof(buf), "%-12s %10.4f %10.4f %10.4f %10s %8zu\n",
                  label.c_str(), score.f1, score.precision, score.recall, cov,
                  group.pairs.size());
    table += buf;
  }
  return o.json ? DumpRecords(records) : table;
}

std::string CmdStats(const Options& o, std::istream& in) {
  struct Split {
    std::string name;
    CorpusStats stats;
  };
  std::vector<Split> splits;
  for (const std::string& arg : o.splits) {
    std::string name, path;
    const auto eq = arg.find('=');
    if (eq == std::string::npos) {
      path = arg;
      name = path == "-" ? "stdin" : std::filesystem::path(path).stem().string();
    } else {
      name = arg.substr(0, eq);
      path = arg.substr(eq + 1);
    }
    splits.push_back({name, ComputeCorpusStats(LoadNer(path, o.section, in))});
  }
  const auto labels = Taxonomy(ToSection(o.section));

  if (o.json) {
    ordered_json summary = ordered_json::array();
    ordered_json counts = ordered_json::array();
    for (const Split& s : splits) {
      summary.push_back({{"split", s.name},
                         {"documents", s.stats.documents},
                         {"sentences", s.stats.sentences},
                         {"spans", s.stats.total_spans}});
      for (EntityLabel label : labels) {
        counts.push_back({{"split", s.name},
                          {"label", LabelName(label)},
                          {"count", s.stats.count(label)}});
      }
    }
    ordered_json root{{"splits", summary}, {"label_counts", counts}};
    return root.dump(1) + "\n";
  }

  std::string table;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-14s", "");
  table += buf;
  for (const Split& s : splits) {
    std::snprintf(buf, sizeof(buf), " %12.12s", s.name.c_str());
    table += buf;
  }
  table += "\n";
  auto row = [&](std::string_view name, auto value_of) {
    std::snprintf(buf, sizeof(buf), "%-14.*s", static_cast<int>(name.size()),
                  name.data());
    table += buf;
    for (const Split& s : splits) {
      std::snprintf(buf, sizeof(buf), " %12zu", value_of(s.stats));
      table += buf;
    }
    table += "\n";
  };
  row("documents", [](const CorpusStats& s) { return s.documents; });
  row("sentences", [](const CorpusStats& s) { return s.sentences; });
  row("spans", [](const CorpusStats& s) { return s.total_spans; });
  for (EntityLabel label : labels) {
    row(LabelName(label), [label](const CorpusStats& s) { return s.count(label); });
  }
  return table;
}

std::size_t DefaultJobs() {
  if (const char* env = std::getenv(kJobsEnv)) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return 1;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  Options o;
  o.jobs = DefaultJobs();

  CLI::App app{"Legal NLP pipeline toolkit: span normalization, BIO "
               "conversion, fusion, chunking, keyword decisions, explanation "
               "spans and evaluation."};
  app.name("legalpipe");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-j,--jobs", o.jobs,
                 std::string("worker threads (default: $") + kJobsEnv + " or 1)")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1024}));

  auto add_section = [&](CLI::App* sub) {
    sub->add_option("--section", o.section, "taxonomy: preamble or judgment")
        ->check(CLI::IsMember({"preamble", "judgment"}));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "output path ('-' for stdout)");
  };

  auto* normalize = app.add_subcommand(
      "normalize", "collapse whitespace and repeated symbols, remap spans");
  normalize->add_option("input", o.input, "NER-JSON corpus")->required();
  add_section(normalize);
  add_output(normalize);

  auto* bio = app.add_subcommand("bio", "convert between NER-JSON and CoNLL");
  bio->require_subcommand(1);
  auto* encode = bio->add_subcommand("encode", "NER-JSON -> CoNLL");
  encode->add_option("input", o.input, "NER-JSON corpus")->required();
  encode->add_option("--tokenize", o.bio_tokenize, "punct or whitespace")
      ->check(CLI::IsMember({"punct", "whitespace"}));
  encode->add_flag("--strict", o.strict,
                   "reject spans not aligned to token boundaries");
  add_section(encode);
  add_output(encode);
  auto* decode = bio->add_subcommand("decode", "CoNLL -> NER-JSON");
  decode->add_option("input", o.input, "CoNLL file")->required();
  decode->add_option("--text", o.text_path,
                     "NER-JSON corpus holding the document texts")
      ->required();
  add_section(decode);
  add_output(decode);

  auto* fuse = app.add_subcommand("fuse", "fuse two NER-JSON prediction files");
  fuse->add_option("first", o.input, "first prediction file")->required();
  fuse->add_option("second", o.second_input, "second prediction file")->required();
  fuse->add_option("--priority", o.priority,
                   "model kept on label conflicts: first or second")
      ->check(CLI::IsMember({"first", "second"}));
  add_section(fuse);
  add_output(fuse);

  auto* chunk = app.add_subcommand("chunk", "overlapping token windows");
  chunk->add_option("input", o.input, "decision corpus")->required();
  chunk->add_option("--chunk-len", o.chunk_len, "tokens per chunk")
      ->check(CLI::PositiveNumber);
  chunk->add_option("--overlap", o.overlap, "tokens shared by neighbours");
  chunk->add_option("--max-tokens", o.max_tokens, "truncate documents first")
      ->check(CLI::PositiveNumber);
  chunk->add_option("--tokenize", o.window_tokenize, "whitespace or punct")
      ->check(CLI::IsMember({"punct", "whitespace"}));
  add_output(chunk);

  auto* tail = app.add_subcommand("tail", "last N tokens of each document");
  tail->add_option("input", o.input, "decision corpus")->required();
  tail->add_option("-n,--tokens", o.tail_n, "tokens to keep");
  tail->add_option("--tokenize", o.window_tokenize, "whitespace or punct")
      ->check(CLI::IsMember({"punct", "whitespace"}));
  add_output(tail);

  auto* decide = app.add_subcommand("decide", "keyword-based outcome detection");
  decide->add_option("input", o.input, "decision corpus")->required();
  decide->add_option("--policy", o.policy, "latest or majority")
      ->check(CLI::IsMember({"latest", "majority"}));
  decide->add_option("--lexicon", o.lexicon, "lexicon config file")
      ->check(CLI::ExistingFile);
  add_output(decide);

  auto* explain = app.add_subcommand("explain", "last-N-words explanation spans");
  explain->add_option("input", o.input, "decision corpus")->required();
  auto* n_opt = explain->add_option("-n,--words", o.n_words, "span length in words")
                    ->check(CLI::PositiveNumber);
  explain->add_flag("--sweep", o.sweep,
                    "all lengths 250 300 350 400 450 500 512 520 550")
      ->excludes(n_opt);
  add_output(explain);

  auto* eval = app.add_subcommand("eval", "evaluation");
  eval->require_subcommand(1);
  auto* eval_ner = eval->add_subcommand("ner", "strict-match per-label P/R/F1");
  eval_ner->add_option("--gold", o.gold, "gold NER-JSON")->required();
  eval_ner->add_option("--pred", o.pred, "predicted NER-JSON")->required();
  eval_ner->add_flag("--json", o.json, "machine-readable records");
  add_section(eval_ner);
  add_output(eval_ner);
  auto* eval_clf = eval->add_subcommand("clf", "binary macro-F1");
  eval_clf->add_option("--gold", o.gold, "decision corpus with labels")->required();
  eval_clf->add_option("--pred", o.pred, "records with id and label")->required();
  eval_clf->add_flag("--json", o.json, "machine-readable records");
  add_output(eval_clf);
  auto* eval_rouge = eval->add_subcommand("rouge", "ROUGE-2 per span length");
  eval_rouge->add_option("--candidates", o.candidates, "records with id and text")
      ->required();
  eval_rouge->add_option("--references", o.references, "records with id and text")
      ->required();
  eval_rouge->add_flag("--json", o.json, "machine-readable records");
  add_output(eval_rouge);

  auto* stats = app.add_subcommand("stats", "per-split label distribution");
  stats->add_option("splits", o.splits, "[name=]corpus.json ...")->required();
  stats->add_flag("--json", o.json, "plot-ready records");
  add_section(stats);
  add_output(stats);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.push_back("legalpipe");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& a : argv_storage) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "legalpipe: " << e.what() << "\n";
    return kExitUsageError;
  }

  try {
    if (chunk->parsed() && o.overlap >= o.chunk_len) {
      throw UsageError("--overlap must be smaller than --chunk-len");
    }
    std::string result;
    if (normalize->parsed()) {
      result = CmdNormalize(o, in);
    } else if (encode->parsed()) {
      result = CmdBioEncode(o, in);
    } else if (decode->parsed()) {
      result = CmdBioDecode(o, in);
    } else if (fuse->parsed()) {
      result = CmdFuse(o, in);
    } else if (chunk->parsed()) {
      result = CmdChunk(o, in);
    } else if (tail->parsed()) {
      result = CmdTail(o, in);
    } else if (decide->parsed()) {
      result = CmdDecide(o, in);
    } else if (explain->parsed()) {
      result = CmdExplain(o, in);
    } else if (eval_ner->parsed()) {
      result = CmdEvalNer(o, in);
    } else if (eval_clf->parsed()) {
      result = CmdEvalClf(o, in, err);
    } else if (eval_rouge->parsed()) {
      result = CmdEvalRouge(o, in);
    } else if (stats->parsed()) {
      result = CmdStats(o, in);
    }
    WriteOutput(o.output, result, out);
  } catch (const UsageError& e) {
    err << "legalpipe: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const ParameterError& e) {
    err << "legalpipe: " << e.what() << "\n";
    return kExitUsageError;
  } catch (const Error& e) {
    err << "legalpipe: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitOk;
}

}  // namespace legalpipe::cli
