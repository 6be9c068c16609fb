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

#include "legalpipe/seqlabel.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <set>

#include "legalpipe/errors.h"
#include "legalpipe/text.h"

namespace legalpipe {

namespace {

void PushToken(std::u32string_view text, std::size_t start, std::size_t end,
               std::vector<Token>* tokens) {
  tokens->push_back(
      Token{EncodeUtf8(text.substr(start, end - start)), start, end});
}

}  // namespace

std::vector<Token> Tokenize(std::string_view utf8, TokenizeMode mode) {
  const std::u32string text = DecodeUtf8(utf8);
  const std::size_t n = text.size();
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < n) {
    if (IsSpace(text[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && !IsSpace(text[j])) ++j;
    if (mode == TokenizeMode::kWhitespace) {
      PushToken(text, i, j, &tokens);
    } else {
      std::size_t core_begin = i;
      while (core_begin < j && IsPunct(text[core_begin])) ++core_begin;
      std::size_t core_end = j;
      while (core_end > core_begin && IsPunct(text[core_end - 1])) --core_end;
      for (std::size_t k = i; k < core_begin; ++k) PushToken(text, k, k + 1, &tokens);
      if (core_begin < core_end) PushToken(text, core_begin, core_end, &tokens);
      for (std::size_t k = core_end; k < j; ++k) PushToken(text, k, k + 1, &tokens);
    }
    i = j;
  }
  return tokens;
}

std::optional<BioTag> ParseBioTag(std::string_view tag) {
  if (tag == "O") return BioTag{};
  if (tag.size() < 3 || tag[1] != '-') return std::nullopt;
  BioTag parsed;
  if (tag[0] == 'B') {
    parsed.kind = BioTag::Kind::kBegin;
  } else if (tag[0] == 'I') {
    parsed.kind = BioTag::Kind::kInside;
  } else {
    return std::nullopt;
  }
  const auto label = ParseLabel(tag.substr(2));
  if (!label) return std::nullopt;
  parsed.label = *label;
  return parsed;
}

std::string FormatBioTag(const BioTag& tag) {
  switch (tag.kind) {
    case BioTag::Kind::kOutside:
      return "O";
    case BioTag::Kind::kBegin:
      return "B-" + std::string(LabelName(tag.label));
    case BioTag::Kind::kInside:
      return "I-" + std::string(LabelName(tag.label));
  }
  return "O";
}

bool IsValidBio(std::span<const std::string> tags) {
  std::optional<EntityLabel> open;
  for (const std::string& raw : tags) {
    const auto tag = ParseBioTag(raw);
    if (!tag) return false;
    switch (tag->kind) {
      case BioTag::Kind::kOutside:
        open.reset();
        break;
      case BioTag::Kind::kBegin:
        open = tag->label;
        break;
      case BioTag::Kind::kInside:
        if (open != tag->label) return false;
        break;
    }
  }
  return true;
}

std::vector<std::string> RepairBio(std::span<const std::string> tags) {
  std::vector<std::string> repaired;
  repaired.reserve(tags.size());
  std::optional<EntityLabel> open;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    auto tag = ParseBioTag(tags[i]);
    if (!tag) {
      throw ParseError("unknown BIO tag \"" + tags[i] + "\" at position " +
                       std::to_string(i));
    }
    if (tag->kind == BioTag::Kind::kInside && open != tag->label) {
      tag->kind = BioTag::Kind::kBegin;
    }
    open = tag->kind == BioTag::Kind::kOutside
               ? std::nullopt
               : std::optional<EntityLabel>(tag->label);
    repaired.push_back(FormatBioTag(*tag));
  }
  return repaired;
}

BioDocument SpansToBio(std::vector<Token> tokens,
                       std::span<const EntitySpan> spans, bool strict) {
  std::vector<EntitySpan> sorted(spans.begin(), spans.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (Overlaps(sorted[k - 1], sorted[k])) {
      throw ValidationError("overlapping spans " + FormatSpan(sorted[k - 1]) +
                            " and " + FormatSpan(sorted[k]));
    }
  }

  BioDocument doc;
  doc.tags.assign(tokens.size(), "O");
  for (const EntitySpan& span : sorted) {
    // First token ending after the span start.
    auto first = std::partition_point(
        tokens.begin(), tokens.end(),
        [&](const Token& t) { return t.end <= span.start; });
    auto last = first;
    while (last != tokens.end() && last->start < span.end) ++last;
    if (first == last) {
      throw ValidationError("span " + FormatSpan(span) + " covers no token");
    }
    if (strict && (first->start != span.start || (last - 1)->end != span.end)) {
      throw ValidationError("span " + FormatSpan(span) +
                            " is not aligned to token boundaries");
    }
    const auto begin_index = static_cast<std::size_t>(first - tokens.begin());
    const auto end_index = static_cast<std::size_t>(last - tokens.begin());
    for (std::size_t i = begin_index; i < end_index; ++i) {
      if (doc.tags[i] != "O") {
        throw ValidationError("span " + FormatSpan(span) +
                              " shares token \"" + tokens[i].text +
                              "\" with another span");
      }
      doc.tags[i] = FormatBioTag(
          {i == begin_index ? BioTag::Kind::kBegin : BioTag::Kind::kInside,
           span.label});
    }
  }
  doc.tokens = std::move(tokens);
  return doc;
}

std::vector<EntitySpan> BioToSpans(const BioDocument& doc,
                                   std::string_view source_text) {
  if (doc.tokens.size() != doc.tags.size()) {
    throw ValidationError(std::to_string(doc.tokens.size()) + " tokens but " +
                          std::to_string(doc.tags.size()) + " tags");
  }
  const std::size_t length = CodepointLength(source_text);
  std::vector<EntitySpan> spans;
  std::optional<EntitySpan> open;
  for (std::size_t i = 0; i < doc.tags.size(); ++i) {
    const Token& token = doc.tokens[i];
    if (token.start >= token.end || token.end > length) {
      throw ValidationError("token " + std::to_string(i) + " [" +
                            std::to_string(token.start) + "," +
                            std::to_string(token.end) +
                            ") lies outside the source text");
    }
    const auto tag = ParseBioTag(doc.tags[i]);
    if (!tag) {
      throw ParseError("unknown BIO tag \"" + doc.tags[i] + "\" at token " +
                       std::to_string(i));
    }
    const bool continues = tag->kind == BioTag::Kind::kInside && open &&
                           open->label == tag->label;
    if (continues) {
      open->end = token.end;
      continue;
    }
    if (open) spans.push_back(*open);
    open.reset();
    if (tag->kind != BioTag::Kind::kOutside) {
      open = EntitySpan{token.start, token.end, tag->label};
    }
  }
  if (open) spans.push_back(*open);
  return spans;
}

PosVocabulary PosVocabulary::Build(std::span<const std::string> tags) {
  PosVocabulary vocab;
  for (const std::string& tag : tags) vocab.Add(tag);
  return vocab;
}

int PosVocabulary::Add(std::string_view tag) {
  auto it = ids_.find(std::string(tag));
  if (it != ids_.end()) return it->second;
  const int id = by_id_.empty() ? 1 : by_id_.rbegin()->first + 1;
  ids_.emplace(std::string(tag), id);
  by_id_.emplace(id, std::string(tag));
  return id;
}

int PosVocabulary::Id(std::string_view tag) const {
  auto it = ids_.find(std::string(tag));
  return it == ids_.end() ? kUnknownId : it->second;
}

bool PosVocabulary::Contains(std::string_view tag) const {
  return ids_.count(std::string(tag)) > 0;
}

PosVocabulary PosVocabulary::Load(std::istream& in) {
  PosVocabulary vocab;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos ||
        tab == 0) {
      throw ParseError("vocabulary line " + std::to_string(line_no) +
                       ": expected tag<TAB>id");
    }
    const std::string tag = line.substr(0, tab);
    int id = 0;
    try {
      std::size_t used = 0;
      id = std::stoi(line.substr(tab + 1), &used);
      if (used != line.size() - tab - 1) throw std::invalid_argument("id");
    } catch (const std::exception&) {
      throw ParseError("vocabulary line " + std::to_string(line_no) +
                       ": bad id");
    }
    if (id <= kUnknownId) {
      throw ValidationError("vocabulary line " + std::to_string(line_no) +
                            ": id " + std::to_string(id) + " is reserved");
    }
    if (vocab.ids_.count(tag) || vocab.by_id_.count(id)) {
      throw ValidationError("vocabulary line " + std::to_string(line_no) +
                            ": duplicate tag or id");
    }
    vocab.ids_.emplace(tag, id);
    vocab.by_id_.emplace(id, tag);
  }
  return vocab;
}

void PosVocabulary::Save(std::ostream& out) const {
  for (const auto& [id, tag] : by_id_) out << tag << '\t' << id << '\n';
}

std::vector<int> AlignPosToSubwords(
    std::span<const std::string> word_pos,
    std::span<const std::optional<std::size_t>> subword_word_ids,
    const PosVocabulary& vocab, std::vector<std::string>* warnings) {
  std::vector<int> ids;
  ids.reserve(subword_word_ids.size());
  std::set<std::string> reported;
  for (std::size_t i = 0; i < subword_word_ids.size(); ++i) {
    const auto& word = subword_word_ids[i];
    if (!word) {
      ids.push_back(PosVocabulary::kUnknownId);
      continue;
    }
    if (*word >= word_pos.size()) {
      throw ValidationError("subword " + std::to_string(i) +
                            " refers to word " + std::to_string(*word) +
                            " but only " + std::to_string(word_pos.size()) +
                            " words are tagged");
    }
    const std::string& tag = word_pos[*word];
    const int id = vocab.Id(tag);
    if (id == PosVocabulary::kUnknownId && warnings &&
        reported.insert(tag).second) {
      warnings->push_back("unknown POS tag \"" + tag + "\" mapped to id 0");
    }
    ids.push_back(id);
  }
  return ids;
}

std::vector<ConllSentence> ReadConll(std::istream& in) {
  std::vector<ConllSentence> sentences;
  ConllSentence current;
  bool open = false;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (open) sentences.push_back(std::move(current));
    current = ConllSentence{};
    open = false;
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto tab = line.find('\t');
    if (line[0] == '#' && tab == std::string::npos) {
      constexpr std::string_view kIdPrefix = "# id = ";
      if (line.rfind(kIdPrefix, 0) == 0) {
        if (!current.tokens.empty()) {
          throw ParseError("CoNLL line " + std::to_string(line_no) +
                           ": id comment inside a sentence");
        }
        current.id = line.substr(kIdPrefix.size());
        open = true;
      }
      continue;
    }
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      const auto columns = std::count(line.begin(), line.end(), '\t') + 1;
      throw ParseError("CoNLL line " + std::to_string(line_no) + ": expected 2 columns, found " +
                       std::to_string(columns));
    }
    if (tab == 0 || tab + 1 == line.size()) {
      throw ParseError("CoNLL line " + std::to_string(line_no) +
                       ": empty token or tag");
    }
    current.tokens.push_back(line.substr(0, tab));
    current.tags.push_back(line.substr(tab + 1));
    open = true;
  }
  flush();
  return sentences;
}

void WriteConll(std::span<const ConllSentence> sentences, std::ostream& out) {
  for (const ConllSentence& sentence : sentences) {
    if (sentence.tokens.size() != sentence.tags.size()) {
      throw ValidationError("sentence \"" + sentence.id +
                            "\": token/tag count mismatch");
    }
    if (sentence.id.find_first_of("\r\n") != std::string::npos) {
      throw ValidationError("sentence id contains a line break");
    }
    if (!sentence.id.empty()) out << "# id = " << sentence.id << '\n';
    for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
      const std::string& token = sentence.tokens[i];
      const std::string& tag = sentence.tags[i];
      if (token.empty() || tag.empty() ||
          token.find_first_of("\t\r\n") != std::string::npos ||
          tag.find_first_of("\t\r\n") != std::string::npos) {
        throw ValidationError("sentence \"" + sentence.id + "\": token " +
                              std::to_string(i) +
                              " cannot be written as a CoNLL line");
      }
      out << token << '\t' << tag << '\n';
    }
    out << '\n';
  }
  if (!out) throw Error("write failed");
}

ConllSentence ToConll(const BioDocument& doc, std::string id) {
  ConllSentence sentence;
  sentence.id = std::move(id);
  sentence.tags = doc.tags;
  sentence.tokens.reserve(doc.tokens.size());
  for (const Token& token : doc.tokens) sentence.tokens.push_back(token.text);
  return sentence;
}

BioDocument AttachOffsets(const ConllSentence& sentence,
                          std::string_view source_text) {
  if (sentence.tokens.size() != sentence.tags.size()) {
    throw ValidationError("sentence \"" + sentence.id +
                          "\": token/tag count mismatch");
  }
  const std::u32string text = DecodeUtf8(source_text);
  BioDocument doc;
  doc.tags = sentence.tags;
  doc.tokens.reserve(sentence.tokens.size());
  std::size_t pos = 0;
  for (std::size_t i = 0; i < sentence.tokens.size(); ++i) {
    const std::u32string token = DecodeUtf8(sentence.tokens[i]);
    while (pos < text.size() && IsSpace(text[pos])) ++pos;
    if (text.compare(pos, token.size(), token) != 0) {
      throw ValidationError("sentence \"" + sentence.id + "\": token " +
                            std::to_string(i) + " \"" + sentence.tokens[i] +
                            "\" does not match the text at offset " +
                            std::to_string(pos));
    }
    doc.tokens.push_back(
        Token{sentence.tokens[i], pos, pos + token.size()});
    pos += token.size();
  }
  while (pos < text.size() && IsSpace(text[pos])) ++pos;
  if (pos != text.size()) {
    throw ValidationError("sentence \"" + sentence.id +
                          "\": text continues past the last token at offset " +
                          std::to_string(pos));
  }
  return doc;
}

}  // namespace legalpipe
