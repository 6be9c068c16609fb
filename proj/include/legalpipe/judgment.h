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

// Keyword-based judgment outcome detection and end-of-document explanation
// spans.

#ifndef LEGALPIPE_JUDGMENT_H_
#define LEGALPIPE_JUDGMENT_H_

#include <array>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "legalpipe/corpus.h"

namespace legalpipe {

enum class Polarity { kFavorable, kUnfavorable };

std::string_view PolarityName(Polarity polarity);

// Two disjoint lists of lowercase phrases. Phrases are stored with internal
// whitespace collapsed to single spaces.
class KeywordLexicon {
 public:
  // favorable: dispose of, disposed of, accept, allow, allowed, accepted,
  // upheld. unfavorable: dismiss, dismissed, discard, discarded, reject,
  // rejected.
  static KeywordLexicon Default();

  // Throws ValidationError on empty, non-lowercase or shared phrases.
  KeywordLexicon(std::vector<std::string> favorable,
                 std::vector<std::string> unfavorable);

  // Plain-text config: "[favorable]" and "[unfavorable]" headers followed by
  // one phrase per line. Blank lines and lines starting with '#' are
  // skipped; phrases are lowercased. Throws ParseError on a phrase outside a
  // section or an unknown header.
  static KeywordLexicon Load(std::istream& in);

  const std::vector<std::string>& favorable() const { return favorable_; }
  const std::vector<std::string>& unfavorable() const { return unfavorable_; }

 private:
  std::vector<std::string> favorable_;
  std::vector<std::string> unfavorable_;
};

enum class DecisionPolicy {
  kLatestMatch,    // polarity of the match that starts last
  kCountMajority,  // more frequent polarity; ties go to the latest match
};

struct KeywordMatch {
  std::string phrase;
  Polarity polarity = Polarity::kFavorable;
  std::size_t position = 0;  // code point offset in the original text

  bool operator==(const KeywordMatch&) const = default;
};

struct DecisionResult {
  Decision label = Decision::kRejected;
  std::vector<KeywordMatch> matches;  // ordered by position
  bool evidence_found = false;
};

// Case-insensitive phrase search over the whole text at word boundaries
// (alphanumeric / non-alphanumeric transitions). The text is searched in
// normalized form so multi-word phrases match across any whitespace run.
// Without any match the label is kRejected and evidence_found is false.
DecisionResult DetectDecision(std::string_view text,
                              const KeywordLexicon& lexicon,
                              DecisionPolicy policy = DecisionPolicy::kLatestMatch);

// Span lengths, in words, evaluated by the explanation sweep.
inline constexpr std::array<std::size_t, 9> kExplanationSweep = {
    250, 300, 350, 400, 450, 500, 512, 520, 550};

struct ExplanationResult {
  std::size_t n_words = 0;
  std::size_t word_count_total = 0;
  std::size_t start = 0;  // code points, [start, end) of the original text
  std::size_t end = 0;
  std::string text;
  bool empty = false;  // the document has no words

  std::size_t span_words() const {
    return n_words < word_count_total ? n_words : word_count_total;
  }
};

// The last n_words whitespace-delimited words, returned as the verbatim
// original slice from the first selected word to the end of the last word.
// Throws ParameterError when n_words == 0.
ExplanationResult ExtractExplanation(std::string_view text, std::size_t n_words);

// Mean over documents of 100 * min(n_words, W) / W, W being the document's
// word count. A document without words counts as fully covered. Throws
// ParameterError on an empty list or n_words == 0.
double CoveragePercentage(std::span<const std::string> docs,
                          std::size_t n_words);

struct WordStats {
  double mean_words = 0.0;
  double mean_sentences = 0.0;
};

// Sentences follow CountSentences() in text.h. Throws ParameterError on an
// empty list.
WordStats DatasetWordStats(std::span<const std::string> docs);

}  // namespace legalpipe

#endif  // LEGALPIPE_JUDGMENT_H_
