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

#include "legalpipe/normalize.h"

#include <algorithm>

#include "legalpipe/errors.h"
#include "legalpipe/text.h"

namespace legalpipe {

NormalizedCodepoints NormalizeCodepoints(std::u32string_view text) {
  NormalizedCodepoints result;
  const std::size_t n = text.size();
  result.char_map.assign(n, std::nullopt);
  result.text.reserve(n);

  std::size_t i = 0;
  while (i < n) {
    const char32_t c = text[i];
    std::size_t j = i + 1;
    if (IsSpace(c)) {
      while (j < n && IsSpace(text[j])) ++j;
      const bool leading = result.text.empty();
      const bool trailing = j == n;
      if (!leading && !trailing) {
        result.char_map[i] = result.text.size();
        result.text.push_back(U' ');
      }
    } else if (!IsAlnum(c)) {
      while (j < n && text[j] == c) ++j;
      result.char_map[i] = result.text.size();
      result.text.push_back(c);
    } else {
      result.char_map[i] = result.text.size();
      result.text.push_back(c);
    }
    i = j;
  }
  return result;
}

NormalizationResult NormalizeText(std::string_view text) {
  NormalizedCodepoints cp = NormalizeCodepoints(DecodeUtf8(text));
  NormalizationResult result;
  result.normalized_text = EncodeUtf8(cp.text);
  result.normalized_length = cp.text.size();
  result.char_map = std::move(cp.char_map);
  return result;
}

std::vector<std::size_t> NormalizationResult::OriginalPositions() const {
  std::vector<std::size_t> inverse(normalized_length);
  for (std::size_t i = 0; i < char_map.size(); ++i) {
    if (char_map[i]) inverse[*char_map[i]] = i;
  }
  return inverse;
}

EntitySpan RemapSpan(const EntitySpan& span, const NormalizationResult& result) {
  if (span.start >= span.end || span.end > result.char_map.size()) {
    throw ValidationError("span " + FormatSpan(span) +
                          " out of bounds for text of " +
                          std::to_string(result.char_map.size()) +
                          " characters");
  }
  std::size_t first = span.start;
  while (first < span.end && !result.char_map[first]) ++first;
  if (first == span.end) {
    throw RemapError("span " + FormatSpan(span) +
                     " maps to an empty interval after normalization");
  }
  std::size_t last = span.end - 1;
  while (!result.char_map[last]) --last;
  return EntitySpan{*result.char_map[first], *result.char_map[last] + 1,
                    span.label};
}

AnnotatedDocument RemapDocument(const AnnotatedDocument& doc) {
  const NormalizationResult result = NormalizeText(doc.text);
  AnnotatedDocument out;
  out.id = doc.id;
  out.section = doc.section;
  out.text = result.normalized_text;
  out.spans.reserve(doc.spans.size());
  try {
    for (const EntitySpan& span : doc.spans) {
      out.spans.push_back(RemapSpan(span, result));
    }
  } catch (const Error& e) {
    throw RemapError("document \"" + doc.id + "\": " + e.what());
  }
  // Two distinct spans can collapse onto the same triple when they differ
  // only by deleted characters.
  std::vector<std::size_t> order(out.spans.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return out.spans[a] < out.spans[b];
  });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (out.spans[order[k]] == out.spans[order[k - 1]]) {
      throw RemapError("document \"" + doc.id + "\": spans " +
                       FormatSpan(doc.spans[order[k - 1]]) + " and " +
                       FormatSpan(doc.spans[order[k]]) +
                       " collapse onto the same normalized span");
    }
  }
  return out;
}

}  // namespace legalpipe
