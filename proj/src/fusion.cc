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
#include <unordered_set>

namespace legalpipe {

namespace {

bool ByStart(const EntitySpan& a, const EntitySpan& b) {
  return a.start < b.start;
}

// True iff `span` intersects a differently labelled span of `sorted`, which
// is ordered by start.
bool ConflictsWith(const EntitySpan& span,
                   const std::vector<EntitySpan>& sorted) {
  // Only spans starting before span.end can intersect it.
  auto stop = std::lower_bound(sorted.begin(), sorted.end(),
                               EntitySpan{span.end, span.end, span.label},
                               ByStart);
  for (auto it = sorted.begin(); it != stop; ++it) {
    if (it->label != span.label && it->end > span.start) return true;
  }
  return false;
}

}  // namespace

std::vector<EntitySpan> FuseSpans(std::span<const EntitySpan> a,
                                  std::span<const EntitySpan> b,
                                  const FusionConfig& config) {
  const bool first_wins = config.priority == FusionPriority::kFirst;
  std::vector<EntitySpan> winner(first_wins ? a.begin() : b.begin(),
                                 first_wins ? a.end() : b.end());
  const std::span<const EntitySpan> other = first_wins ? b : a;
  std::sort(winner.begin(), winner.end());

  std::vector<EntitySpan> pool = winner;
  for (const EntitySpan& span : other) {
    if (!ConflictsWith(span, winner)) pool.push_back(span);
  }

  // Sweep each label's spans in start order, growing the current component
  // while the next span starts strictly before its end.
  std::sort(pool.begin(), pool.end(),
            [](const EntitySpan& x, const EntitySpan& y) {
              if (x.label != y.label) return x.label < y.label;
              return x.start < y.start || (x.start == y.start && x.end < y.end);
            });
  std::vector<EntitySpan> fused;
  for (const EntitySpan& span : pool) {
    if (!fused.empty() && fused.back().label == span.label &&
        span.start < fused.back().end) {
      fused.back().end = std::max(fused.back().end, span.end);
    } else {
      fused.push_back(span);
    }
  }
  std::sort(fused.begin(), fused.end());
  return fused;
}

PredictionSet FusePredictionSets(const PredictionSet& a, const PredictionSet& b,
                                 const FusionConfig& config) {
  PredictionSet fused;
  fused.model_id = "fused(" + a.model_id + "+" + b.model_id + ")";
  static const std::vector<EntitySpan> kEmpty;
  std::unordered_set<std::string> seen;
  for (const DocumentSpans& doc : a.documents) {
    const std::vector<EntitySpan>* other = b.Find(doc.doc_id);
    fused.documents.push_back(
        {doc.doc_id, FuseSpans(doc.spans, other ? *other : kEmpty, config)});
    seen.insert(doc.doc_id);
  }
  for (const DocumentSpans& doc : b.documents) {
    if (seen.count(doc.doc_id)) continue;
    fused.documents.push_back({doc.doc_id, FuseSpans(kEmpty, doc.spans, config)});
  }
  return fused;
}

}  // namespace legalpipe
