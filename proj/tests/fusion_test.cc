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

#include "legalpipe/fusion.h"

#include <algorithm>

#include "generators.h"
#include "gtest/gtest.h"
#include "oracles.h"

namespace legalpipe {
namespace {

using Spans = std::vector<EntitySpan>;

constexpr EntityLabel kOrg = EntityLabel::kOrg;

TEST(FuseSpansTest, MergesIntersectingSameLabel) {
  EXPECT_EQ(FuseSpans(Spans{{43, 53, kOrg}}, Spans{{45, 60, kOrg}}),
            (Spans{{43, 60, kOrg}}));
}

TEST(FuseSpansTest, DisjointUnion) {
  EXPECT_EQ(FuseSpans(Spans{{0, 5, EntityLabel::kCourt}},
                      Spans{{10, 15, EntityLabel::kJudge}}),
            (Spans{{0, 5, EntityLabel::kCourt}, {10, 15, EntityLabel::kJudge}}));
}

TEST(FuseSpansTest, EmptyIsIdentity) {
  const Spans x = {{3, 7, EntityLabel::kDate}, {10, 12, kOrg}};
  EXPECT_EQ(FuseSpans(Spans{}, x), x);
  EXPECT_EQ(FuseSpans(x, Spans{}), x);
}

TEST(FuseSpansTest, TransitiveMerge) {
  EXPECT_EQ(FuseSpans(Spans{{0, 5, kOrg}}, Spans{{4, 9, kOrg}, {8, 12, kOrg}}),
            (Spans{{0, 12, kOrg}}));
}

TEST(FuseSpansTest, TouchingSpansStaySeparate) {
  EXPECT_EQ(FuseSpans(Spans{{0, 5, kOrg}}, Spans{{5, 9, kOrg}}),
            (Spans{{0, 5, kOrg}, {5, 9, kOrg}}));
}

TEST(FuseSpansTest, PriorityDecidesLabelConflict) {
  const Spans a = {{0, 10, kOrg}};
  const Spans b = {{5, 15, EntityLabel::kCourt}};
  EXPECT_EQ(FuseSpans(a, b), a);
  EXPECT_EQ(FuseSpans(a, b, {FusionPriority::kSecond}), b);
}

TEST(FuseSpansTest, MatchesOverlapGraphOracle) {
  testing::Rng rng(1234);
  for (int i = 0; i < 3000; ++i) {
    const Spans a = testing::RandomModelOutput(rng, 6, 30, 4);
    const Spans b = testing::RandomModelOutput(rng, 6, 30, 4);
    for (FusionPriority p : {FusionPriority::kFirst, FusionPriority::kSecond}) {
      EXPECT_EQ(FuseSpans(a, b, {p}),
                testing::BruteForceFuse(a, b, p == FusionPriority::kFirst));
    }
  }
}

TEST(FuseSpansTest, IdempotentAndOrderIndependent) {
  testing::Rng rng(99);
  for (int i = 0; i < 500; ++i) {
    Spans a = testing::RandomModelOutput(rng, 8, 40, 3);
    const Spans fused = FuseSpans(a, a);
    EXPECT_EQ(FuseSpans(fused, fused), fused);
    Spans shuffled = a;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    const Spans b = testing::RandomModelOutput(rng, 8, 40, 3);
    EXPECT_EQ(FuseSpans(a, b), FuseSpans(shuffled, b));
  }
}

TEST(FuseSpansTest, OutputHasNoSameLabelOverlap) {
  testing::Rng rng(77);
  for (int i = 0; i < 500; ++i) {
    const Spans out = FuseSpans(testing::RandomModelOutput(rng, 8, 40, 3),
                                testing::RandomModelOutput(rng, 8, 40, 3));
    EXPECT_TRUE(std::is_sorted(out.begin(), out.end()));
    for (std::size_t x = 0; x < out.size(); ++x) {
      for (std::size_t y = x + 1; y < out.size(); ++y) {
        if (out[x].label == out[y].label) EXPECT_FALSE(Overlaps(out[x], out[y]));
      }
    }
  }
}

TEST(FusePredictionSetsTest, IdenticalSetsAndPassThrough) {
  PredictionSet a{"m1", {{"d1", {{0, 4, kOrg}}}, {"d2", {{1, 2, kOrg}}}}};
  PredictionSet b{"m2", {{"d1", {{2, 8, kOrg}}}, {"d3", {{5, 6, kOrg}}}}};

  const PredictionSet same = FusePredictionSets(a, a);
  ASSERT_EQ(same.documents.size(), 2u);
  EXPECT_EQ(same.documents[0].spans, a.documents[0].spans);

  const PredictionSet fused = FusePredictionSets(a, b);
  ASSERT_EQ(fused.documents.size(), 3u);
  EXPECT_EQ(fused.documents[0].doc_id, "d1");
  EXPECT_EQ(fused.documents[0].spans, (Spans{{0, 8, kOrg}}));
  EXPECT_EQ(fused.documents[1].doc_id, "d2");
  EXPECT_EQ(fused.documents[1].spans, (Spans{{1, 2, kOrg}}));
  EXPECT_EQ(fused.documents[2].doc_id, "d3");
  EXPECT_EQ(fused.documents[2].spans, (Spans{{5, 6, kOrg}}));
}

}  // namespace
}  // namespace legalpipe
