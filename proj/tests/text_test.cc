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

#include "legalpipe/text.h"

#include "gtest/gtest.h"
#include "legalpipe/errors.h"

namespace legalpipe {
namespace {

TEST(Utf8Test, RoundTrip) {
  const std::string s = "Śrī ₹5 \xF0\x9F\x98\x80 ok";
  const std::u32string u = DecodeUtf8(s);
  EXPECT_EQ(u.size(), 11u);
  EXPECT_EQ(EncodeUtf8(u), s);
  EXPECT_EQ(CodepointLength(s), 11u);
}

TEST(Utf8Test, InvalidInput) {
  EXPECT_THROW(DecodeUtf8("\xC3"), ParseError);
  EXPECT_THROW(DecodeUtf8("\xC0\xAF"), ParseError);
  EXPECT_THROW(DecodeUtf8("\xED\xA0\x80"), ParseError);
  EXPECT_THROW(DecodeUtf8("\xFF"), ParseError);
}

TEST(CharClassTest, Basics) {
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_TRUE(IsSpace(U' '));
  EXPECT_FALSE(IsSpace(U'x'));
  EXPECT_TRUE(IsAlnum(U'7'));
  EXPECT_TRUE(IsAlnum(U'ś'));
  EXPECT_FALSE(IsAlnum(U'-'));
  EXPECT_FALSE(IsAlnum(U'₹'));
  EXPECT_TRUE(IsPunct(U'.'));
  EXPECT_EQ(ToLowerAscii(U'Q'), U'q');
  EXPECT_EQ(ToLowerAscii(U'Ś'), U'Ś');
}

TEST(CountTest, WordsAndSentences) {
  EXPECT_EQ(CountWords(U"  a  b\tc\n"), 3u);
  EXPECT_EQ(CountWords(U""), 0u);
  EXPECT_EQ(CountSentences(U"One. Two?! Three"), 3u);
  EXPECT_EQ(CountSentences(U"..."), 0u);
  EXPECT_EQ(CountSentences(U""), 0u);
}

}  // namespace
}  // namespace legalpipe
