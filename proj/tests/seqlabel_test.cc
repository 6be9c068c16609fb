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

#include "legalpipe/seqlabel.h"

#include <algorithm>
#include <sstream>

#include "generators.h"
#include "gtest/gtest.h"
#include "legalpipe/errors.h"

namespace legalpipe {
namespace {

using Tags = std::vector<std::string>;

std::vector<std::string> Texts(const std::vector<Token>& tokens) {
  std::vector<std::string> out;
  for (const Token& t : tokens) out.push_back(t.text);
  return out;
}

TEST(TokenizeTest, Whitespace) {
  const auto tokens = Tokenize("The appeal is allowed.", TokenizeMode::kWhitespace);
  EXPECT_EQ(Texts(tokens), (Tags{"The", "appeal", "is", "allowed."}));
  EXPECT_EQ(tokens.back().start, 14u);
  EXPECT_EQ(tokens.back().end, 22u);
}

TEST(TokenizeTest, PunctSplit) {
  const auto tokens = Tokenize("The appeal is allowed.", TokenizeMode::kPunctSplit);
  EXPECT_EQ(Texts(tokens), (Tags{"The", "appeal", "is", "allowed", "."}));
  EXPECT_EQ(tokens[4].start, 21u);
}

TEST(TokenizeTest, PunctSplitKeepsInnerPunctuation) {
  const auto tokens = Tokenize("(u/s 302, IPC).", TokenizeMode::kPunctSplit);
  EXPECT_EQ(Texts(tokens), (Tags{"(", "u/s", "302", ",", "IPC", ")", "."}));
}

TEST(TokenizeTest, Empty) {
  EXPECT_TRUE(Tokenize("", TokenizeMode::kWhitespace).empty());
  EXPECT_TRUE(Tokenize(" \n\t", TokenizeMode::kPunctSplit).empty());
}

TEST(SpansToBioTest, SupremeCourt) {
  const std::string text = "The Supreme Court of India";
  const auto tokens = Tokenize(text, TokenizeMode::kWhitespace);
  const Tags expected = {"O", "B-COURT", "I-COURT", "I-COURT", "I-COURT"};
  const EntitySpan exact{4, 26, EntityLabel::kCourt};
  EXPECT_EQ(SpansToBio(tokens, {&exact, 1}, true).tags, expected);

  const EntitySpan cut{6, 26, EntityLabel::kCourt};
  EXPECT_EQ(SpansToBio(tokens, {&cut, 1}, false).tags, expected);
  EXPECT_THROW(SpansToBio(tokens, {&cut, 1}, true), ValidationError);
}

TEST(SpansToBioTest, NoSpansAllOutside) {
  const auto tokens = Tokenize("a b c", TokenizeMode::kWhitespace);
  EXPECT_EQ(SpansToBio(tokens, {}, true).tags, (Tags{"O", "O", "O"}));
}

TEST(SpansToBioTest, OverlappingSpansRejected) {
  const auto tokens = Tokenize("a b c", TokenizeMode::kWhitespace);
  const std::vector<EntitySpan> spans = {{0, 3, EntityLabel::kOrg},
                                         {2, 5, EntityLabel::kCourt}};
  EXPECT_THROW(SpansToBio(tokens, spans, false), ValidationError);
}

TEST(BioToSpansTest, RunRule) {
  const std::string text = "The Supreme Court said";
  BioDocument doc{Tokenize(text, TokenizeMode::kWhitespace),
                  {"O", "B-COURT", "I-COURT", "O"}};
  EXPECT_EQ(BioToSpans(doc, text),
            (std::vector<EntitySpan>{{4, 17, EntityLabel::kCourt}}));
}

TEST(BioToSpansTest, AllOutside) {
  BioDocument doc{Tokenize("a b", TokenizeMode::kWhitespace), {"O", "O"}};
  EXPECT_TRUE(BioToSpans(doc, "a b").empty());
}

TEST(BioToSpansTest, StrayInsideRepaired) {
  const std::string text = "by Tata Steel";
  BioDocument doc{Tokenize(text, TokenizeMode::kWhitespace), {"O", "I-ORG", "I-ORG"}};
  EXPECT_EQ(BioToSpans(doc, text),
            (std::vector<EntitySpan>{{3, 13, EntityLabel::kOrg}}));
}

TEST(BioToSpansTest, LabelChangeStartsNewSpan) {
  const std::string text = "a b";
  BioDocument doc{Tokenize(text, TokenizeMode::kWhitespace), {"B-ORG", "I-COURT"}};
  EXPECT_EQ(BioToSpans(doc, text),
            (std::vector<EntitySpan>{{0, 1, EntityLabel::kOrg},
                                     {2, 3, EntityLabel::kCourt}}));
}

TEST(BioToSpansTest, UnknownTag) {
  BioDocument doc{Tokenize("a", TokenizeMode::kWhitespace), {"B-PLANET"}};
  EXPECT_THROW(BioToSpans(doc, "a"), ParseError);
}

TEST(BioTest, RoundTripOnGeneratedDocuments) {
  testing::Rng rng(42);
  for (TokenizeMode mode : {TokenizeMode::kWhitespace, TokenizeMode::kPunctSplit}) {
    for (int i = 0; i < 500; ++i) {
      AnnotatedDocument doc = testing::RandomAnnotatedDocument(rng, "d", 40, mode);
      const BioDocument bio = SpansToBio(Tokenize(doc.text, mode), doc.spans, true);
      EXPECT_TRUE(IsValidBio(bio.tags));
      std::sort(doc.spans.begin(), doc.spans.end());
      EXPECT_EQ(BioToSpans(bio, doc.text), doc.spans);
    }
  }
}

TEST(BioTest, RepairYieldsValidSequence) {
  testing::Rng rng(8);
  const Tags alphabet = {"O", "B-ORG", "I-ORG", "B-COURT", "I-COURT"};
  for (int i = 0; i < 1000; ++i) {
    Tags tags;
    for (std::size_t k = testing::Uniform(rng, 0, 10); k > 0; --k) {
      tags.push_back(testing::Pick(rng, alphabet));
    }
    const Tags repaired = RepairBio(tags);
    EXPECT_TRUE(IsValidBio(repaired));
    if (IsValidBio(tags)) EXPECT_EQ(repaired, tags);
  }
}

TEST(PosVocabularyTest, BuildAndLookup) {
  const Tags tags = {"NOUN", "VERB", "NOUN"};
  const PosVocabulary vocab = PosVocabulary::Build(tags);
  EXPECT_EQ(vocab.Id("NOUN"), 1);
  EXPECT_EQ(vocab.Id("VERB"), 2);
  EXPECT_EQ(vocab.Id("XPOS"), PosVocabulary::kUnknownId);
  EXPECT_EQ(vocab.size(), 2u);
  EXPECT_EQ(vocab.vocabulary_size(), 3u);
}

TEST(PosVocabularyTest, SaveLoadRoundTrip) {
  const Tags tags = {"DET", "NOUN", "VERB"};
  const PosVocabulary vocab = PosVocabulary::Build(tags);
  std::stringstream buf;
  vocab.Save(buf);
  const PosVocabulary loaded = PosVocabulary::Load(buf);
  for (const std::string& t : tags) EXPECT_EQ(loaded.Id(t), vocab.Id(t));
}

TEST(PosVocabularyTest, ReservedIdRejected) {
  std::istringstream in("NOUN\t0\n");
  EXPECT_THROW(PosVocabulary::Load(in), ValidationError);
}

TEST(AlignPosTest, SubwordsInheritWordTag) {
  const Tags pos = {"VERB"};
  const PosVocabulary vocab = PosVocabulary::Build(pos);
  const std::vector<std::optional<std::size_t>> ids = {0, 0};
  EXPECT_EQ(AlignPosToSubwords(pos, ids, vocab),
            (std::vector<int>{vocab.Id("VERB"), vocab.Id("VERB")}));
}

TEST(AlignPosTest, SpecialTokenIsZero) {
  const std::vector<std::optional<std::size_t>> ids = {std::nullopt};
  EXPECT_EQ(AlignPosToSubwords({}, ids, PosVocabulary()), (std::vector<int>{0}));
}

TEST(AlignPosTest, UnknownTagWarns) {
  const Tags pos = {"XPOS"};
  const std::vector<std::optional<std::size_t>> ids = {0};
  std::vector<std::string> warnings;
  EXPECT_EQ(AlignPosToSubwords(pos, ids, PosVocabulary(), &warnings),
            (std::vector<int>{0}));
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("XPOS"), std::string::npos);
}

TEST(AlignPosTest, WordIndexOutOfRange) {
  const Tags pos = {"NOUN"};
  const std::vector<std::optional<std::size_t>> ids = {3};
  EXPECT_THROW(AlignPosToSubwords(pos, ids, PosVocabulary::Build(pos)),
               ValidationError);
}

TEST(ConllTest, TwoSentences) {
  std::istringstream in("The\tO\nCourt\tB-COURT\n\nIt\tO\n");
  const auto sentences = ReadConll(in);
  ASSERT_EQ(sentences.size(), 2u);
  EXPECT_EQ(sentences[0].tokens, (Tags{"The", "Court"}));
  EXPECT_EQ(sentences[0].tags, (Tags{"O", "B-COURT"}));
  EXPECT_EQ(sentences[1].tokens, (Tags{"It"}));
}

TEST(ConllTest, ThreeColumnsRejected) {
  std::istringstream in("The\tDET\tO\n");
  try {
    ReadConll(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 1"), std::string::npos) << e.what();
  }
}

TEST(ConllTest, RoundTripWithIds) {
  testing::Rng rng(17);
  std::vector<ConllSentence> sentences;
  for (int i = 0; i < 50; ++i) {
    const AnnotatedDocument doc = testing::RandomAnnotatedDocument(
        rng, "doc" + std::to_string(i), 20, TokenizeMode::kPunctSplit);
    sentences.push_back(ToConll(
        SpansToBio(Tokenize(doc.text, TokenizeMode::kPunctSplit), doc.spans, true),
        doc.id));
  }
  std::stringstream buf;
  WriteConll(sentences, buf);
  EXPECT_EQ(ReadConll(buf), sentences);
}

TEST(ConllTest, AttachOffsetsRecoversTokens) {
  const std::string text = "The  Supreme\nCourt";
  const BioDocument doc =
      SpansToBio(Tokenize(text, TokenizeMode::kWhitespace), {}, true);
  EXPECT_EQ(AttachOffsets(ToConll(doc), text), doc);
  ConllSentence wrong = ToConll(doc);
  wrong.tokens[1] = "Supremo";
  EXPECT_THROW(AttachOffsets(wrong, text), ValidationError);
}

}  // namespace
}  // namespace legalpipe
