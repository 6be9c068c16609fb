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

// Offset-carrying tokenization, span <-> BIO conversion, the CoNLL codec and
// POS-tag alignment to subword sequences.

#ifndef LEGALPIPE_SEQLABEL_H_
#define LEGALPIPE_SEQLABEL_H_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "legalpipe/corpus.h"

namespace legalpipe {

// A token is the source slice [start, end) in code points.
struct Token {
  std::string text;
  std::size_t start = 0;
  std::size_t end = 0;

  bool operator==(const Token&) const = default;
};

enum class TokenizeMode {
  kWhitespace,  // maximal non-whitespace runs
  kPunctSplit,  // plus leading/trailing punctuation detached one per token
};

std::vector<Token> Tokenize(std::string_view text, TokenizeMode mode);

struct BioDocument {
  std::vector<Token> tokens;
  std::vector<std::string> tags;

  bool operator==(const BioDocument&) const = default;
};

struct BioTag {
  enum class Kind { kOutside, kBegin, kInside };
  Kind kind = Kind::kOutside;
  EntityLabel label = EntityLabel::kCourt;  // meaningless for kOutside
};

// Parses "O", "B-<LABEL>" or "I-<LABEL>"; nullopt for anything else.
std::optional<BioTag> ParseBioTag(std::string_view tag);
std::string FormatBioTag(const BioTag& tag);

// True iff no I-L tag follows anything other than B-L or I-L. Unknown tags
// make the sequence invalid.
bool IsValidBio(std::span<const std::string> tags);

// Rewrites stray I-L tags to B-L. Throws ParseError on unknown tags.
std::vector<std::string> RepairBio(std::span<const std::string> tags);

// Tags every token that intersects a span: B-L on the first, I-L after. In
// non-strict mode a span is widened to the boundaries of the tokens it
// touches; in strict mode a span must start and end on token boundaries.
// Throws ValidationError on overlapping spans, on two spans touching the
// same token, on a span that touches no token, and on strict misalignment.
BioDocument SpansToBio(std::vector<Token> tokens,
                       std::span<const EntitySpan> spans, bool strict);

// One span per maximal B-L I-L* run, from the first token's start to the last
// token's end. Stray I-L tags are treated as B-L. Throws ParseError on
// unknown tags and ValidationError when tokens fall outside source_text.
std::vector<EntitySpan> BioToSpans(const BioDocument& doc,
                                   std::string_view source_text);

// Dense ids for POS tags. Id 0 is reserved for special tokens and unknown
// tags; real tags get ids from 1 in first-seen order.
class PosVocabulary {
 public:
  static constexpr int kUnknownId = 0;

  PosVocabulary() = default;

  static PosVocabulary Build(std::span<const std::string> tags);

  // Reads "tag<TAB>id" lines. Throws ParseError on malformed lines and
  // ValidationError on id 0, negative ids or duplicates.
  static PosVocabulary Load(std::istream& in);
  void Save(std::ostream& out) const;

  // Returns the existing id or assigns the next one.
  int Add(std::string_view tag);

  // kUnknownId when absent.
  int Id(std::string_view tag) const;
  bool Contains(std::string_view tag) const;

  // Number of real tags.
  std::size_t size() const { return by_id_.size(); }

  // Rows needed by an embedding table indexed by these ids.
  std::size_t vocabulary_size() const {
    return by_id_.empty() ? 1 : static_cast<std::size_t>(by_id_.rbegin()->first) + 1;
  }

 private:
  std::unordered_map<std::string, int> ids_;
  std::map<int, std::string> by_id_;
};

// Gives each subword the id of its word's POS tag; subwords without a word
// (special tokens) and words with tags missing from the vocabulary get 0.
// Unknown tags are reported once each through `warnings` when non-null.
// Throws ValidationError when a word index is out of range.
std::vector<int> AlignPosToSubwords(
    std::span<const std::string> word_pos,
    std::span<const std::optional<std::size_t>> subword_word_ids,
    const PosVocabulary& vocab, std::vector<std::string>* warnings = nullptr);

// One CoNLL block: "token<TAB>tag" lines terminated by a blank line. The
// block may be preceded by a "# id = <doc id>" comment.
struct ConllSentence {
  std::string id;
  std::vector<std::string> tokens;
  std::vector<std::string> tags;

  bool operator==(const ConllSentence&) const = default;
};

// Throws ParseError (with line number) on lines that do not have exactly two
// tab-separated columns. Lines starting with '#' that contain no tab are
// comments.
std::vector<ConllSentence> ReadConll(std::istream& in);
void WriteConll(std::span<const ConllSentence> sentences, std::ostream& out);

ConllSentence ToConll(const BioDocument& doc, std::string id = {});

// Recovers token offsets by matching the token texts, in order, against the
// source text with only whitespace allowed in between. Throws
// ValidationError when the tokens do not tile the text.
BioDocument AttachOffsets(const ConllSentence& sentence,
                          std::string_view source_text);

}  // namespace legalpipe

#endif  // LEGALPIPE_SEQLABEL_H_
