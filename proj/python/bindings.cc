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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "legalpipe/chunking.h"
#include "legalpipe/cli.h"
#include "legalpipe/corpus.h"
#include "legalpipe/errors.h"
#include "legalpipe/fusion.h"
#include "legalpipe/judgment.h"
#include "legalpipe/metrics.h"
#include "legalpipe/normalize.h"
#include "legalpipe/seqlabel.h"

namespace py = pybind11;

namespace legalpipe {
namespace {

TokenizeMode ParseMode(const std::string& mode) {
  if (mode == "whitespace") return TokenizeMode::kWhitespace;
  if (mode == "punct") return TokenizeMode::kPunctSplit;
  throw ParameterError("tokenize mode must be 'whitespace' or 'punct', got '" +
                       mode + "'");
}

std::string Repr(const EntitySpan& s) { return "EntitySpan" + FormatSpan(s); }

void ExportCorpus(py::module_& m) {
  py::enum_<Section>(m, "Section")
      .value("PREAMBLE", Section::kPreamble)
      .value("JUDGMENT", Section::kJudgment);

  py::enum_<EntityLabel> label(m, "EntityLabel");
  for (std::size_t i = 0; i < kNumEntityLabels; ++i) {
    const auto l = static_cast<EntityLabel>(i);
    label.value(std::string(LabelName(l)).c_str(), l);
  }

  py::class_<EntitySpan>(m, "EntitySpan")
      .def(py::init<std::size_t, std::size_t, EntityLabel>(), py::arg("start"),
           py::arg("end"), py::arg("label"))
      .def_readwrite("start", &EntitySpan::start)
      .def_readwrite("end", &EntitySpan::end)
      .def_readwrite("label", &EntitySpan::label)
      .def(py::self == py::self)
      .def(py::self < py::self)
      .def("__hash__",
           [](const EntitySpan& s) {
             return py::hash(py::make_tuple(s.start, s.end, static_cast<int>(s.label)));
           })
      .def("__repr__", &Repr);

  py::class_<AnnotatedDocument>(m, "AnnotatedDocument")
      .def(py::init([](std::string id, std::string text, Section section,
                       std::vector<EntitySpan> spans) {
             return AnnotatedDocument{std::move(id), std::move(text), section,
                                      std::move(spans)};
           }),
           py::arg("id"), py::arg("text"), py::arg("section") = Section::kJudgment,
           py::arg("spans") = std::vector<EntitySpan>{})
      .def_readwrite("id", &AnnotatedDocument::id)
      .def_readwrite("text", &AnnotatedDocument::text)
      .def_readwrite("section", &AnnotatedDocument::section)
      .def_readwrite("spans", &AnnotatedDocument::spans)
      .def(py::self == py::self);

  m.def("taxonomy", [](Section s) {
    const auto labels = Taxonomy(s);
    return std::vector<EntityLabel>(labels.begin(), labels.end());
  });
  m.def(
      "load_ner_corpus",
      [](const std::string& json, Section section) {
        std::istringstream in(json);
        return LoadNerCorpus(in, section, "<string>");
      },
      py::arg("json"), py::arg("section") = Section::kJudgment,
      "Parses a NER-JSON corpus held in a string.");
  m.def(
      "dump_ner_corpus",
      [](const std::vector<AnnotatedDocument>& docs) {
        std::ostringstream out;
        WriteNerCorpus(docs, out);
        return out.str();
      },
      py::arg("docs"));
  m.def(
      "corpus_label_counts",
      [](const std::vector<AnnotatedDocument>& docs) {
        const CorpusStats stats = ComputeCorpusStats(docs);
        py::dict counts;
        for (std::size_t i = 0; i < kNumEntityLabels; ++i) {
          if (stats.label_counts[i] > 0) {
            counts[py::str(std::string(LabelName(static_cast<EntityLabel>(i))))] =
                stats.label_counts[i];
          }
        }
        return counts;
      },
      py::arg("docs"));
}

void ExportText(py::module_& m) {
  py::class_<NormalizationResult>(m, "NormalizationResult")
      .def_readonly("normalized_text", &NormalizationResult::normalized_text)
      .def_readonly("char_map", &NormalizationResult::char_map)
      .def_readonly("normalized_length", &NormalizationResult::normalized_length);
  m.def("normalize_text", &NormalizeText, py::arg("text"));
  m.def("remap_span", &RemapSpan, py::arg("span"), py::arg("result"));
  m.def("remap_document", &RemapDocument, py::arg("doc"));

  py::class_<Token>(m, "Token")
      .def_readonly("text", &Token::text)
      .def_readonly("start", &Token::start)
      .def_readonly("end", &Token::end)
      .def("__repr__", [](const Token& t) {
        return "Token('" + t.text + "', " + std::to_string(t.start) + ", " +
               std::to_string(t.end) + ")";
      });
  m.def(
      "tokenize",
      [](const std::string& text, const std::string& mode) {
        return Tokenize(text, ParseMode(mode));
      },
      py::arg("text"), py::arg("mode") = "punct");
  m.def(
      "spans_to_bio",
      [](const std::string& text, const std::vector<EntitySpan>& spans,
         const std::string& mode, bool strict) {
        return SpansToBio(Tokenize(text, ParseMode(mode)), spans, strict).tags;
      },
      py::arg("text"), py::arg("spans"), py::arg("mode") = "punct",
      py::arg("strict") = false,
      "Tokenizes text and returns one BIO tag per token.");
  m.def(
      "bio_to_spans",
      [](const std::string& text, const std::vector<std::string>& tags,
         const std::string& mode) {
        BioDocument doc{Tokenize(text, ParseMode(mode)), tags};
        if (doc.tags.size() != doc.tokens.size()) {
          throw ValidationError("expected " + std::to_string(doc.tokens.size()) +
                                " tags, got " + std::to_string(doc.tags.size()));
        }
        return BioToSpans(doc, text);
      },
      py::arg("text"), py::arg("tags"), py::arg("mode") = "punct");
}

void ExportPipeline(py::module_& m) {
  m.def(
      "fuse_spans",
      [](const std::vector<EntitySpan>& a, const std::vector<EntitySpan>& b,
         const std::string& priority) {
        FusionConfig config;
        if (priority == "second") {
          config.priority = FusionPriority::kSecond;
        } else if (priority != "first") {
          throw ParameterError("priority must be 'first' or 'second'");
        }
        return FuseSpans(a, b, config);
      },
      py::arg("a"), py::arg("b"), py::arg("priority") = "first");

  m.def(
      "chunk_ranges",
      [](std::size_t n, std::size_t chunk_len, std::size_t overlap) {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const Chunk& c : ChunkRanges(n, chunk_len, overlap)) {
          out.emplace_back(c.first, c.last);
        }
        return out;
      },
      py::arg("n"), py::arg("chunk_len") = kDefaultChunkLength,
      py::arg("overlap") = kDefaultChunkOverlap,
      "Half-open token ranges of overlapping windows.");

  py::class_<KeywordMatch>(m, "KeywordMatch")
      .def_readonly("phrase", &KeywordMatch::phrase)
      .def_readonly("position", &KeywordMatch::position)
      .def_property_readonly("polarity", [](const KeywordMatch& k) {
        return std::string(PolarityName(k.polarity));
      });
  py::class_<DecisionResult>(m, "DecisionResult")
      .def_property_readonly("label",
                             [](const DecisionResult& r) { return static_cast<int>(r.label); })
      .def_readonly("matches", &DecisionResult::matches)
      .def_readonly("evidence_found", &DecisionResult::evidence_found);
  m.def(
      "detect_decision",
      [](const std::string& text, const std::string& policy) {
        DecisionPolicy p = DecisionPolicy::kLatestMatch;
        if (policy == "majority") {
          p = DecisionPolicy::kCountMajority;
        } else if (policy != "latest") {
          throw ParameterError("policy must be 'latest' or 'majority'");
        }
        return DetectDecision(text, KeywordLexicon::Default(), p);
      },
      py::arg("text"), py::arg("policy") = "latest");

  py::class_<ExplanationResult>(m, "ExplanationResult")
      .def_readonly("n_words", &ExplanationResult::n_words)
      .def_readonly("word_count_total", &ExplanationResult::word_count_total)
      .def_readonly("start", &ExplanationResult::start)
      .def_readonly("end", &ExplanationResult::end)
      .def_readonly("text", &ExplanationResult::text)
      .def_readonly("empty", &ExplanationResult::empty);
  m.def("extract_explanation", &ExtractExplanation, py::arg("text"),
        py::arg("n_words"));
  m.def(
      "coverage_percentage",
      [](const std::vector<std::string>& docs, std::size_t n) {
        return CoveragePercentage(docs, n);
      },
      py::arg("docs"), py::arg("n_words"));
  m.attr("EXPLANATION_SWEEP") =
      std::vector<std::size_t>(kExplanationSweep.begin(), kExplanationSweep.end());
}

void ExportMetrics(py::module_& m) {
  py::class_<RougeScore>(m, "RougeScore")
      .def_readonly("precision", &RougeScore::precision)
      .def_readonly("recall", &RougeScore::recall)
      .def_readonly("f1", &RougeScore::f1);
  m.def("rouge2", &Rouge2, py::arg("candidate"), py::arg("reference"));
  m.def(
      "rouge2_corpus",
      [](const std::vector<std::pair<std::string, std::string>>& pairs) {
        return Rouge2Corpus(pairs);
      },
      py::arg("pairs"));
  m.def(
      "macro_f1",
      [](const std::vector<int>& gold, const std::vector<int>& pred) {
        auto convert = [](const std::vector<int>& v) {
          std::vector<Decision> out;
          for (int x : v) {
            if (x != 0 && x != 1) throw ValidationError("labels must be 0 or 1");
            out.push_back(static_cast<Decision>(x));
          }
          return out;
        };
        return MacroF1(convert(gold), convert(pred));
      },
      py::arg("gold"), py::arg("pred"));
  m.def(
      "ner_weighted_f1",
      [](const std::vector<AnnotatedDocument>& gold,
         const std::vector<AnnotatedDocument>& pred) {
        return EvaluateNer(gold, ToPredictionSet("pred", pred)).weighted_f1;
      },
      py::arg("gold"), py::arg("pred"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int status;
        {
          py::gil_scoped_release release;
          status = cli::Run(args, in, out, err);
        }
        return py::make_tuple(status, py::bytes(out.str()), err.str());
      },
      py::arg("args"), py::arg("stdin") = "",
      "Runs the command-line driver in process. Returns (status, stdout, stderr).");
}

}  // namespace
}  // namespace legalpipe

PYBIND11_MODULE(_legalpipe, m) {
  m.doc() = "Legal NER span tooling and judgment explanation utilities.";

  auto error = py::register_exception<legalpipe::Error>(m, "Error", PyExc_ValueError);
  py::register_exception<legalpipe::ParseError>(m, "ParseError", error);
  py::register_exception<legalpipe::ValidationError>(m, "ValidationError", error);
  py::register_exception<legalpipe::RemapError>(m, "RemapError", error);
  py::register_exception<legalpipe::ParameterError>(m, "ParameterError", error);

  legalpipe::ExportCorpus(m);
  legalpipe::ExportText(m);
  legalpipe::ExportPipeline(m);
  legalpipe::ExportMetrics(m);
}
