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

// Whitespace and repeated-symbol cleanup with an exact character map, so that
// entity offsets can be carried from the raw text into the cleaned text.
//
// Rules, applied in one left-to-right pass over code points:
//   a. a maximal whitespace run becomes one ' ' (the first position of the
//      run survives, the rest are deleted);
//   b. a maximal run (length >= 2) of one repeated non-alphanumeric
//      character keeps its first character; mixed runs such as "-*-*" are
//      left alone;
//   c. leading and trailing whitespace is deleted.
// The transformation is idempotent.

#ifndef LEGALPIPE_NORMALIZE_H_
#define LEGALPIPE_NORMALIZE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "legalpipe/corpus.h"

namespace legalpipe {

struct NormalizationResult {
  std::string normalized_text;  // UTF-8
  // One entry per code point of the original text: its position in the
  // normalized text, or nullopt when the character was deleted. Surviving
  // entries are strictly increasing and cover every normalized position.
  std::vector<std::optional<std::size_t>> char_map;
  std::size_t normalized_length = 0;  // in code points

  // Inverse of char_map: original position of every normalized position.
  std::vector<std::size_t> OriginalPositions() const;
};

NormalizationResult NormalizeText(std::string_view text);

// Code-point form used internally by keyword search.
struct NormalizedCodepoints {
  std::u32string text;
  std::vector<std::optional<std::size_t>> char_map;
};
NormalizedCodepoints NormalizeCodepoints(std::u32string_view text);

// Maps a span of the original text into the normalized text. A start that
// falls on a deleted position snaps forward, an end that falls on deleted
// positions snaps backward, so boundaries never cross surviving content.
// Throws RemapError when nothing inside the span survives and
// ValidationError when the span is out of bounds.
EntitySpan RemapSpan(const EntitySpan& span, const NormalizationResult& result);

// Normalizes the text and remaps every span. Any span failure fails the whole
// document (the error names the document id).
AnnotatedDocument RemapDocument(const AnnotatedDocument& doc);

}  // namespace legalpipe

#endif  // LEGALPIPE_NORMALIZE_H_
