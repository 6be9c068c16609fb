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

#include "legalpipe/chunking.h"

#include "gtest/gtest.h"
#include "legalpipe/errors.h"

namespace legalpipe {
namespace {

std::vector<Token> MakeTokens(std::size_t n) {
  std::vector<Token> tokens;
  for (std::size_t i = 0; i < n; ++i) {
    tokens.push_back({"t" + std::to_string(i), 2 * i, 2 * i + 1});
  }
  return tokens;
}

TEST(ChunkRangesTest, ThousandTokens) {
  EXPECT_EQ(ChunkRanges(1000, 512, 100),
            (std::vector<Chunk>{{0, 0, 512}, {1, 412, 924}, {2, 824, 1000}}));
}

TEST(ChunkRangesTest, ShortAndBoundary) {
  EXPECT_EQ(ChunkRanges(300), (std::vector<Chunk>{{0, 0, 300}}));
  EXPECT_EQ(ChunkRanges(512), (std::vector<Chunk>{{0, 0, 512}}));
  EXPECT_TRUE(ChunkRanges(0).empty());
}

TEST(ChunkRangesTest, ContainedTailChunkSuppressed) {
  // Start 824 would give [824,900), inside [412,900).
  EXPECT_EQ(ChunkRanges(900, 512, 100),
            (std::vector<Chunk>{{0, 0, 512}, {1, 412, 900}}));
}

TEST(ChunkRangesTest, OverlapMustBeSmallerThanLength) {
  EXPECT_THROW(ChunkRanges(10, 100, 100), ParameterError);
  EXPECT_THROW(ChunkRanges(10, 0, 0), ParameterError);
}

TEST(ChunkRangesTest, CoverageAndExactOverlap) {
  for (std::size_t len : {8u, 500u, 512u}) {
    for (std::size_t overlap : {0u, 4u, 100u}) {
      if (overlap >= len) continue;
      for (std::size_t n = 1; n <= 1200; ++n) {
        const auto chunks = ChunkRanges(n, len, overlap);
        ASSERT_FALSE(chunks.empty());
        EXPECT_EQ(chunks.front().first, 0u);
        EXPECT_EQ(chunks.back().last, n);
        for (std::size_t i = 0; i < chunks.size(); ++i) {
          EXPECT_EQ(chunks[i].index, i);
          if (i + 1 < chunks.size()) {
            EXPECT_EQ(chunks[i].size(), len);
            EXPECT_EQ(chunks[i].last - chunks[i + 1].first, overlap);
          }
        }
      }
    }
  }
}

TEST(ChunkTokensTest, UsesTokenCount) {
  const auto tokens = MakeTokens(30);
  EXPECT_EQ(ChunkTokens(tokens, 20, 5),
            (std::vector<Chunk>{{0, 0, 20}, {1, 15, 30}}));
}

TEST(TruncateTokensTest, Limits) {
  EXPECT_EQ(TruncateTokens(MakeTokens(10001)).size(), 10000u);
  EXPECT_EQ(TruncateTokens(MakeTokens(5)), MakeTokens(5));
  EXPECT_TRUE(TruncateTokens(MakeTokens(0)).empty());
  EXPECT_THROW(TruncateTokens(MakeTokens(3), 0), ParameterError);
}

TEST(TailTokensTest, Suffix) {
  const auto tokens = MakeTokens(1000);
  const auto tail = TailTokens(tokens);
  ASSERT_EQ(tail.size(), 510u);
  EXPECT_EQ(tail.front(), tokens[490]);
  EXPECT_EQ(tail.back(), tokens[999]);
  EXPECT_EQ(TailTokens(MakeTokens(100)).size(), 100u);
  EXPECT_TRUE(TailTokens(tokens, 0).empty());
}

}  // namespace
}  // namespace legalpipe
