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

// Code-point level text utilities.
//
// IMPORTANT: every character offset in this library counts Unicode scalar
// values (code points), never bytes. Strings are stored as UTF-8, so any
// offset arithmetic must go through DecodeUtf8() first. Indexing the UTF-8
// bytes directly corrupts spans on non-ASCII documents.

#ifndef LEGALPIPE_TEXT_H_
#define LEGALPIPE_TEXT_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace legalpipe {

// Decodes UTF-8 into code points. Throws ParseError on malformed input.
std::u32string DecodeUtf8(std::string_view utf8);

std::string EncodeUtf8(std::u32string_view text);
void AppendUtf8(char32_t c, std::string* out);

// Number of code points in a UTF-8 string.
std::size_t CodepointLength(std::string_view utf8);

// Whitespace as understood by Python's str.split(): ASCII \t \n \v \f \r,
// space, the information separators U+001C..U+001F, U+0085, U+00A0 and the
// Unicode space separators.
bool IsSpace(char32_t c);

// Letters and digits. ASCII is exact; outside ASCII a code point counts as
// alphanumeric unless it is whitespace or falls in a punctuation/symbol
// block (Latin-1 symbols, General Punctuation through Misc Symbols, CJK
// punctuation, fullwidth ASCII punctuation).
bool IsAlnum(char32_t c);

// Non-whitespace, non-alphanumeric.
inline bool IsPunct(char32_t c) { return !IsSpace(c) && !IsAlnum(c); }

// Lowercases ASCII letters; other code points are returned unchanged.
char32_t ToLowerAscii(char32_t c);

// Number of maximal non-whitespace runs (the Python split() word count).
std::size_t CountWords(std::u32string_view text);

// Sentences are segments terminated by runs of '.', '?' or '!'; a trailing
// unterminated segment counts as well. Only segments that contain at least
// one non-whitespace, non-terminator character are counted.
std::size_t CountSentences(std::u32string_view text);

}  // namespace legalpipe

#endif  // LEGALPIPE_TEXT_H_
