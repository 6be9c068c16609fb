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

// Long-document input construction over token sequences.

#ifndef LEGALPIPE_CHUNKING_H_
#define LEGALPIPE_CHUNKING_H_

#include <cstddef>
#include <span>
#include <vector>

#include "legalpipe/seqlabel.h"

namespace legalpipe {

inline constexpr std::size_t kDefaultMaxTokens = 10000;
inline constexpr std::size_t kDefaultChunkLength = 512;
// Some configurations use 500-token chunks with the same overlap.
inline constexpr std::size_t kAlternateChunkLength = 500;
inline constexpr std::size_t kDefaultChunkOverlap = 100;
// 512 minus the two reserved special tokens.
inline constexpr std::size_t kDefaultTailTokens = 510;

struct Chunk {
  std::size_t index = 0;
  std::size_t first = 0;  // token range [first, last)
  std::size_t last = 0;

  std::size_t size() const { return last - first; }
  bool operator==(const Chunk&) const = default;
};

// Chunk i covers [i * stride, min(i * stride + chunk_len, n)) with
// stride = chunk_len - overlap. Generation stops at the first chunk that
// reaches n, so no chunk is contained in its predecessor and consecutive
// chunks always share exactly `overlap` tokens. n == 0 yields no chunks.
// Throws ParameterError unless overlap < chunk_len.
std::vector<Chunk> ChunkRanges(std::size_t n,
                               std::size_t chunk_len = kDefaultChunkLength,
                               std::size_t overlap = kDefaultChunkOverlap);

std::vector<Chunk> ChunkTokens(std::span<const Token> tokens,
                               std::size_t chunk_len = kDefaultChunkLength,
                               std::size_t overlap = kDefaultChunkOverlap);

// First max_len tokens. Throws ParameterError when max_len == 0.
std::vector<Token> TruncateTokens(std::span<const Token> tokens,
                                  std::size_t max_len = kDefaultMaxTokens);

// Last min(n, size) tokens.
std::vector<Token> TailTokens(std::span<const Token> tokens,
                              std::size_t n = kDefaultTailTokens);

}  // namespace legalpipe

#endif  // LEGALPIPE_CHUNKING_H_
