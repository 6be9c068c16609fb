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

#include "generators.h"
#include "gtest/gtest.h"
#include "legalpipe/errors.h"
#include "oracles.h"

namespace legalpipe {
namespace {

using Decisions = std::vector<Decision>;
constexpr Decision k0 = Decision::kRejected;
constexpr Decision k1 = Decision::kAccepted;

AnnotatedDocument Doc(std::string id, std::vector<EntitySpan> spans) {
  return {std::move(id), std::string(40, 'x'), Section::kJudgment, std::move(spans)};
}

TEST(EvaluateNerTest, HandWorkedBoundaryError) {
  const std::vector<AnnotatedDocument> gold = {
      Doc("d", {{0, 5, EntityLabel::kCourt}, {10, 15, EntityLabel::kJudge}})};
  const PredictionSet pred{
      "m", {{"d", {{0, 5, EntityLabel::kCourt}, {10, 14, EntityLabel::kJudge}}}}};
  const NerEvalReport r = EvaluateNer(gold, pred);
  EXPECT_DOUBLE_EQ(r.Find(EntityLabel::kCourt)->f1, 1.0);
  EXPECT_DOUBLE_EQ(r.Find(EntityLabel::kJudge)->precision, 0.0);
  EXPECT_DOUBLE_EQ(r.Find(EntityLabel::kJudge)->recall, 0.0);
  EXPECT_DOUBLE_EQ(r.weighted_f1, 0.5);
  EXPECT_EQ(r.total_support, 2u);
}

TEST(EvaluateNerTest, PerfectPrediction) {
  testing::Rng rng(2);
  std::vector<AnnotatedDocument> gold;
  for (int i = 0; i < 20; ++i) {
    gold.push_back(testing::RandomAnnotatedDocument(rng, std::to_string(i), 30,
                                                    TokenizeMode::kPunctSplit));
  }
  const NerEvalReport r = EvaluateNer(gold, ToPredictionSet("m", gold));
  for (const LabelScore& s : r.labels) {
    EXPECT_DOUBLE_EQ(s.precision, 1.0);
    EXPECT_DOUBLE_EQ(s.recall, 1.0);
    EXPECT_DOUBLE_EQ(s.f1, 1.0);
  }
}

TEST(EvaluateNerTest, MissingPredictionDocumentIsEmpty) {
  const std::vector<AnnotatedDocument> gold = {Doc("d", {{0, 5, EntityLabel::kCourt}})};
  const NerEvalReport r = EvaluateNer(gold, PredictionSet{"m", {}});
  EXPECT_DOUBLE_EQ(r.Find(EntityLabel::kCourt)->recall, 0.0);
  EXPECT_EQ(r.Find(EntityLabel::kCourt)->false_negatives, 1u);
}

TEST(EvaluateNerTest, DuplicatePredictionMatchesOnce) {
  const std::vector<AnnotatedDocument> gold = {Doc("d", {{0, 5, EntityLabel::kCourt}})};
  // Predictions are not validated for duplicates, so one-to-one matters here.
  const PredictionSet pred{
      "m", {{"d", {{0, 5, EntityLabel::kCourt}, {0, 5, EntityLabel::kCourt}}}}};
  const NerEvalReport r = EvaluateNer(gold, pred);
  EXPECT_EQ(r.Find(EntityLabel::kCourt)->true_positives, 1u);
  EXPECT_EQ(r.Find(EntityLabel::kCourt)->false_positives, 1u);
}

std::vector<EntitySpan> Unique(std::vector<EntitySpan> spans) {
  std::sort(spans.begin(), spans.end());
  spans.erase(std::unique(spans.begin(), spans.end()), spans.end());
  return spans;
}

TEST(EvaluateNerTest, MatchesBruteForceAndSwapDuality) {
  testing::Rng rng(64);
  for (int round = 0; round < 200; ++round) {
    std::vector<AnnotatedDocument> gold, pred_docs;
    testing::BruteCounts counts;
    for (int d = 0; d < 3; ++d) {
      const std::string id = std::to_string(d);
      const auto g = Unique(testing::RandomSpans(rng, 6, 12, 3));
      const auto p = Unique(testing::RandomSpans(rng, 6, 12, 3));
      gold.push_back(Doc(id, g));
      pred_docs.push_back(Doc(id, p));
      testing::BruteForceNerCounts(g, p, &counts);
    }
    const NerEvalReport forward = EvaluateNer(gold, ToPredictionSet("p", pred_docs));
    const NerEvalReport backward = EvaluateNer(pred_docs, ToPredictionSet("g", gold));
    for (const LabelScore& s : forward.labels) {
      EXPECT_EQ(s.true_positives, counts.tp[s.label]);
      EXPECT_EQ(s.support, counts.gold[s.label]);
      EXPECT_EQ(s.true_positives + s.false_positives, counts.pred[s.label]);
      const LabelScore* t = backward.Find(s.label);
      ASSERT_NE(t, nullptr);
      EXPECT_DOUBLE_EQ(s.precision, t->recall);
      EXPECT_DOUBLE_EQ(s.recall, t->precision);
    }
  }
}

TEST(EvaluateNerTest, SubsetPredictionHasFullPrecision) {
  testing::Rng rng(65);
  for (int round = 0; round < 100; ++round) {
    const auto g = Unique(testing::RandomSpans(rng, 8, 20, 4));
    std::vector<EntitySpan> p;
    for (const EntitySpan& s : g) {
      if (testing::Uniform(rng, 0, 1)) p.push_back(s);
    }
    const std::vector<AnnotatedDocument> gold = {Doc("d", g)};
    const NerEvalReport r = EvaluateNer(gold, PredictionSet{"m", {{"d", p}}});
    for (const EntitySpan& s : p) EXPECT_DOUBLE_EQ(r.Find(s.label)->precision, 1.0);
  }
}

TEST(FormatNerReportTest, ScaledToPercent) {
  const std::vector<AnnotatedDocument> gold = {Doc("d", {{0, 5, EntityLabel::kCourt}})};
  const std::string text = FormatNerReport(EvaluateNer(gold, ToPredictionSet("m", gold)));
  EXPECT_NE(text.find("100.00"), std::string::npos) << text;
  EXPECT_NE(text.find("COURT"), std::string::npos);
}

TEST(MacroF1Test, Examples) {
  const Decisions gold = {k1, k1, k0, k0};
  EXPECT_DOUBLE_EQ(MacroF1(gold, gold), 1.0);
  EXPECT_DOUBLE_EQ(MacroF1(gold, Decisions{k1, k0, k0, k1}), 0.5);
}

TEST(MacroF1Test, AbsentClassWarns) {
  const Decisions all_one = {k1, k1};
  std::vector<std::string> warnings;
  EXPECT_DOUBLE_EQ(MacroF1(all_one, all_one, &warnings), 0.5);
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(MacroF1Test, Errors) {
  EXPECT_THROW(MacroF1(Decisions{k1}, Decisions{k1, k0}), ValidationError);
  EXPECT_THROW(MacroF1(Decisions{}, Decisions{}), ParameterError);
}

TEST(MacroF1Test, RelabelInvariant) {
  testing::Rng rng(4);
  auto flip = [](Decisions d) {
    for (Decision& x : d) x = x == k0 ? k1 : k0;
    return d;
  };
  for (int i = 0; i < 300; ++i) {
    Decisions gold, pred;
    for (std::size_t k = testing::Uniform(rng, 1, 12); k > 0; --k) {
      gold.push_back(testing::Uniform(rng, 0, 1) ? k1 : k0);
      pred.push_back(testing::Uniform(rng, 0, 1) ? k1 : k0);
    }
    EXPECT_DOUBLE_EQ(MacroF1(gold, pred), MacroF1(flip(gold), flip(pred)));
  }
}

TEST(Rouge2Test, Examples) {
  const RougeScore same = Rouge2("the appeal is allowed", "the appeal is allowed");
  EXPECT_DOUBLE_EQ(same.f1, 1.0);
  const RougeScore half = Rouge2("a b c", "a b d");
  EXPECT_DOUBLE_EQ(half.precision, 0.5);
  EXPECT_DOUBLE_EQ(half.recall, 0.5);
  EXPECT_DOUBLE_EQ(half.f1, 0.5);
  EXPECT_DOUBLE_EQ(Rouge2("x y z", "p q r").f1, 0.0);
  EXPECT_DOUBLE_EQ(Rouge2("single", "single").f1, 0.0);
  EXPECT_DOUBLE_EQ(Rouge2("A  B", "a\nb").f1, 1.0);
}

TEST(Rouge2Test, RepeatedBigramsClipped) {
  const RougeScore r = Rouge2("a b a b a b", "a b");
  EXPECT_DOUBLE_EQ(r.precision, 1.0 / 5.0);
  EXPECT_DOUBLE_EQ(r.recall, 1.0);
}

TEST(Rouge2Test, MatchesBruteForceAndDuality) {
  testing::Rng rng(6);
  const std::vector<std::string> words = {"a", "b", "c", "The", "the", "d"};
  auto random_text = [&] {
    std::string s;
    for (std::size_t k = testing::Uniform(rng, 0, 8); k > 0; --k) {
      s += testing::Pick(rng, words);
      s += testing::Uniform(rng, 0, 3) ? " " : "\n ";
    }
    return s;
  };
  for (int i = 0; i < 1000; ++i) {
    const std::string a = random_text();
    const std::string b = random_text();
    const RougeScore got = Rouge2(a, b);
    const testing::BruteRouge want = testing::BruteForceRouge2(a, b);
    EXPECT_NEAR(got.precision, want.precision, 1e-12);
    EXPECT_NEAR(got.recall, want.recall, 1e-12);
    EXPECT_NEAR(got.f1, want.f1, 1e-12);
    EXPECT_EQ(got.precision, Rouge2(b, a).recall);
  }
}

TEST(Rouge2CorpusTest, Mean) {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"a b c", "a b d"}, {"x y", "p q"}};
  EXPECT_DOUBLE_EQ(Rouge2Corpus(pairs).f1, 0.25);
  EXPECT_THROW(Rouge2Corpus({}), ParameterError);
}

}  // namespace
}  // namespace legalpipe
