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

// Two-model span fusion.
//
// Same-label spans that intersect are merged into the union of their
// connected component, e.g. (43,53,ORG) + (45,60,ORG) -> (43,60,ORG).
// When spans of different labels intersect, the priority model's span wins
// and the other model's span is dropped whole. Everything else is kept.
// Intervals are half-open, so (0,5) and (5,9) do not intersect.

#ifndef LEGALPIPE_FUSION_H_
#define LEGALPIPE_FUSION_H_

#include <span>
#include <vector>

#include "legalpipe/corpus.h"

namespace legalpipe {

enum class FusionPriority { kFirst, kSecond };

struct FusionConfig {
  FusionPriority priority = FusionPriority::kFirst;
};

// Output is sorted in canonical span order and contains no two intersecting
// spans with the same label.
std::vector<EntitySpan> FuseSpans(std::span<const EntitySpan> a,
                                  std::span<const EntitySpan> b,
                                  const FusionConfig& config = {});

// Per-document FuseSpans. Documents follow a's order, then documents present
// only in b in b's order; a missing document counts as an empty list. The
// result's model_id is "fused(<a>+<b>)".
PredictionSet FusePredictionSets(const PredictionSet& a, const PredictionSet& b,
                                 const FusionConfig& config = {});

}  // namespace legalpipe

#endif  // LEGALPIPE_FUSION_H_
