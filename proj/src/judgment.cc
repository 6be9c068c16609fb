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

#include "legalpipe/judgment.h"

#include <algorithm>
#include <istream>
#include <set>

#include "legalpipe/errors.h"
#include "legalpipe/normalize.h"
#include "legalpipe/text.h"

namespace legalpipe {

namespace {

std::u32string Lowercase(std::u32string text) {
  for (char32_t& c : text) c = ToLowerAscii(c);
  return text;
}

// Collapses whitespace runs and trims, leaving everything else alone.
std::string CollapseSpaces(std::string_view phrase) {
  const std::u32string text = DecodeUtf8(phrase);
  std::u32string out;
  bool pending_space = false;
  for (char32_t c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    out.push_back(c);
  }
  return EncodeUtf8(out);
}

std::vector<std::string> CleanPhrases(std::vector<std::string> phrases,
                                      std::string_view list_name) {
  for (std::string& phrase : phrases) {
    phrase = CollapseSpaces(phrase);
    if (phrase.empty()) {
      throw ValidationError(std::string(list_name) + " lexicon has an empty phrase");
    }
    const std::u32string cp = DecodeUtf8(phrase);
    if (Lowercase(cp) != cp) {
      throw ValidationError(std::string(list_name) + " phrase \"" + phrase +
                            "\" is not lowercase");
    }
    if (NormalizeCodepoints(cp).text != cp) {
      throw ValidationError(std::string(list_name) + " phrase \"" + phrase +
                            "\" contains repeated symbols");
    }
  }
  return phrases;
}

void FindPhrase(std::u32string_view haystack, const std::string& phrase,
                Polarity polarity, std::span<const std::size_t> original,
                std::vector<KeywordMatch>* matches) {
  const std::u32string needle = DecodeUtf8(phrase);
  const bool word_start = IsAlnum(needle.front());
  const bool word_end = IsAlnum(needle.back());
  std::size_t pos = haystack.find(needle);
  while (pos != std::u32string_view::npos) {
    const std::size_t after = pos + needle.size();
    const bool left_ok = !word_start || pos == 0 || !IsAlnum(haystack[pos - 1]);
    const bool right_ok =
        !word_end || after == haystack.size() || !IsAlnum(haystack[after]);
    if (left_ok && right_ok) {
      matches->push_back(KeywordMatch{phrase, polarity, original[pos]});
    }
    pos = haystack.find(needle, pos + 1);
  }
}

}  // namespace

std::string_view PolarityName(Polarity polarity) {
  return polarity == Polarity::kFavorable ? "favorable" : "unfavorable";
}

KeywordLexicon KeywordLexicon::Default() {
  return KeywordLexicon(
      {"dispose of", "disposed of", "accept", "allow", "allowed", "accepted",
       "upheld"},
      {"dismiss", "dismissed", "discard", "discarded", "reject", "rejected"});
}

KeywordLexicon::KeywordLexicon(std::vector<std::string> favorable,
                               std::vector<std::string> unfavorable)
    : favorable_(CleanPhrases(std::move(favorable), "favorable")),
      unfavorable_(CleanPhrases(std::move(unfavorable), "unfavorable")) {
  const std::set<std::string> fav(favorable_.begin(), favorable_.end());
  for (const std::string& phrase : unfavorable_) {
    if (fav.count(phrase)) {
      throw ValidationError("phrase \"" + phrase +
                            "\" is both favorable and unfavorable");
    }
  }
}

KeywordLexicon KeywordLexicon::Load(std::istream& in) {
  std::vector<std::string> favorable, unfavorable;
  std::vector<std::string>* current = nullptr;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string phrase = CollapseSpaces(line);
    if (phrase.empty() || phrase[0] == '#') continue;
    if (phrase.front() == '[' && phrase.back() == ']') {
      if (phrase == "[favorable]") {
        current = &favorable;
      } else if (phrase == "[unfavorable]") {
        current = &unfavorable;
      } else {
        throw ParseError("lexicon line " + std::to_string(line_no) +
                         ": unknown section " + phrase);
      }
      continue;
    }
    if (!current) {
      throw ParseError("lexicon line " + std::to_string(line_no) +
                       ": phrase before any [favorable]/[unfavorable] header");
    }
    current->push_back(EncodeUtf8(Lowercase(DecodeUtf8(phrase))));
  }
  return KeywordLexicon(std::move(favorable), std::move(unfavorable));
}

DecisionResult DetectDecision(std::string_view text,
                              const KeywordLexicon& lexicon,
                              DecisionPolicy policy) {
  NormalizedCodepoints normalized = NormalizeCodepoints(DecodeUtf8(text));
  const std::u32string haystack = Lowercase(std::move(normalized.text));
  std::vector<std::size_t> original(haystack.size());
  for (std::size_t i = 0; i < normalized.char_map.size(); ++i) {
    if (normalized.char_map[i]) original[*normalized.char_map[i]] = i;
  }

  DecisionResult result;
  for (const std::string& phrase : lexicon.favorable()) {
    FindPhrase(haystack, phrase, Polarity::kFavorable, original, &result.matches);
  }
  for (const std::string& phrase : lexicon.unfavorable()) {
    FindPhrase(haystack, phrase, Polarity::kUnfavorable, original,
               &result.matches);
  }
  // Position order; at equal positions the longer phrase sorts last and so
  // decides the latest-match outcome.
  std::sort(result.matches.begin(), result.matches.end(),
            [](const KeywordMatch& a, const KeywordMatch& b) {
              if (a.position != b.position) return a.position < b.position;
              if (a.phrase.size() != b.phrase.size()) {
                return a.phrase.size() < b.phrase.size();
              }
              return a.phrase < b.phrase;
            });

  result.evidence_found = !result.matches.empty();
  if (!result.evidence_found) return result;

  auto to_label = [](Polarity p) {
    return p == Polarity::kFavorable ? Decision::kAccepted : Decision::kRejected;
  };
  Polarity winner = result.matches.back().polarity;
  if (policy == DecisionPolicy::kCountMajority) {
    const auto favorable = std::count_if(
        result.matches.begin(), result.matches.end(),
        [](const KeywordMatch& m) { return m.polarity == Polarity::kFavorable; });
    const auto unfavorable =
        static_cast<std::ptrdiff_t>(result.matches.size()) - favorable;
    if (favorable > unfavorable) winner = Polarity::kFavorable;
    if (unfavorable > favorable) winner = Polarity::kUnfavorable;
  }
  result.label = to_label(winner);
  return result;
}

ExplanationResult ExtractExplanation(std::string_view utf8,
                                     std::size_t n_words) {
  if (n_words == 0) throw ParameterError("n_words must be at least 1");
  const std::u32string text = DecodeUtf8(utf8);
  std::vector<std::size_t> word_starts;
  std::size_t last_word_end = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (IsSpace(text[i])) continue;
    if (i == 0 || IsSpace(text[i - 1])) word_starts.push_back(i);
    last_word_end = i + 1;
  }

  ExplanationResult result;
  result.n_words = n_words;
  result.word_count_total = word_starts.size();
  if (word_starts.empty()) {
    result.empty = true;
    return result;
  }
  const std::size_t first_word =
      word_starts.size() > n_words ? word_starts.size() - n_words : 0;
  result.start = word_starts[first_word];
  result.end = last_word_end;
  result.text = EncodeUtf8(
      std::u32string_view(text).substr(result.start, result.end - result.start));
  return result;
}

double CoveragePercentage(std::span<const std::string> docs,
                          std::size_t n_words) {
  if (docs.empty()) throw ParameterError("coverage needs at least one document");
  if (n_words == 0) throw ParameterError("n_words must be at least 1");
  double total = 0.0;
  for (const std::string& doc : docs) {
    const std::size_t words = CountWords(DecodeUtf8(doc));
    if (words == 0) {
      total += 100.0;
    } else {
      total += 100.0 * static_cast<double>(std::min(n_words, words)) /
               static_cast<double>(words);
    }
  }
  return total / static_cast<double>(docs.size());
}

WordStats DatasetWordStats(std::span<const std::string> docs) {
  if (docs.empty()) throw ParameterError("word stats need at least one document");
  double words = 0.0, sentences = 0.0;
  for (const std::string& doc : docs) {
    const std::u32string text = DecodeUtf8(doc);
    words += static_cast<double>(CountWords(text));
    sentences += static_cast<double>(CountSentences(text));
  }
  const auto n = static_cast<double>(docs.size());
  return WordStats{words / n, sentences / n};
}

}  // namespace legalpipe
