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

// Seeded random generators for property tests.

#ifndef LEGALPIPE_TESTS_GENERATORS_H_
#define LEGALPIPE_TESTS_GENERATORS_H_

#include <random>
#include <string>
#include <vector>

#include "legalpipe/corpus.h"
#include "legalpipe/seqlabel.h"

namespace legalpipe::testing {

using Rng = std::mt19937_64;

inline std::size_t Uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

template <typename T>
const T& Pick(Rng& rng, const std::vector<T>& items) {
  return items[Uniform(rng, 0, items.size() - 1)];
}

// Up to max_spans arbitrary spans (they may overlap) inside [0, text_len).
inline std::vector<EntitySpan> RandomSpans(Rng& rng, std::size_t max_spans,
                                           std::size_t text_len,
                                           std::size_t num_labels) {
  std::vector<EntitySpan> spans;
  const std::size_t count = Uniform(rng, 0, max_spans);
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t start = Uniform(rng, 0, text_len - 1);
    const std::size_t end = Uniform(rng, start + 1, text_len);
    spans.push_back(
        {start, end, static_cast<EntityLabel>(Uniform(rng, 0, num_labels - 1))});
  }
  return spans;
}

// Like RandomSpans but same-label spans never intersect, the precondition of a
// single model's output.
inline std::vector<EntitySpan> RandomModelOutput(Rng& rng, std::size_t max_spans,
                                                 std::size_t text_len,
                                                 std::size_t num_labels) {
  std::vector<EntitySpan> spans;
  for (const EntitySpan& s : RandomSpans(rng, max_spans, text_len, num_labels)) {
    bool clash = false;
    for (const EntitySpan& t : spans) {
      if (t.label == s.label && Overlaps(s, t)) clash = true;
    }
    if (!clash) spans.push_back(s);
  }
  return spans;
}

inline const std::vector<std::string>& Vocabulary() {
  static const std::vector<std::string> words = {
      "The",      "appeal",   "is",    "allowed", "Supreme", "Court",
      "of",       "India",    "S.",    "302",     "IPC",     "(1995)",
      "Delhi",    "v.",       "State", "Ltd.",    "no.",     "12/2004",
      "Mr.",      "Sharma",   "dated", "\"Ram\"", "Śrī",     "₹5,000",
      "petition", "dismissed", "--",   "...",     "Art.",    "14,",
  };
  return words;
}

// Text of whitespace-joined vocabulary words with random separators.
inline std::string RandomText(Rng& rng, std::size_t max_words) {
  static const std::vector<std::string> separators = {" ", " ", " ", "  ",
                                                      "\n", "\t", " \n\n "};
  std::string text;
  const std::size_t words = Uniform(rng, 0, max_words);
  for (std::size_t i = 0; i < words; ++i) {
    if (i > 0) text += Pick(rng, separators);
    text += Pick(rng, Vocabulary());
  }
  return text;
}

// Non-overlapping spans whose boundaries coincide with token boundaries.
inline std::vector<EntitySpan> TokenAlignedSpans(Rng& rng,
                                                 const std::vector<Token>& tokens,
                                                 Section section) {
  std::vector<EntitySpan> spans;
  const auto labels = Taxonomy(section);
  std::size_t i = 0;
  while (i < tokens.size()) {
    if (Uniform(rng, 0, 2) == 0) {
      const std::size_t len = Uniform(rng, 1, std::min<std::size_t>(4, tokens.size() - i));
      spans.push_back({tokens[i].start, tokens[i + len - 1].end,
                       labels[Uniform(rng, 0, labels.size() - 1)]});
      i += len;
    } else {
      ++i;
    }
  }
  return spans;
}

inline AnnotatedDocument RandomAnnotatedDocument(Rng& rng, std::string id,
                                                 std::size_t max_words,
                                                 TokenizeMode mode) {
  AnnotatedDocument doc;
  doc.id = std::move(id);
  doc.section = Section::kJudgment;
  doc.text = RandomText(rng, max_words);
  doc.spans = TokenAlignedSpans(rng, Tokenize(doc.text, mode), doc.section);
  return doc;
}

}  // namespace legalpipe::testing

#endif  // LEGALPIPE_TESTS_GENERATORS_H_
