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

#include "legalpipe/chunking.h"

#include <algorithm>
#include <string>

#include "legalpipe/errors.h"

namespace legalpipe {

std::vector<Chunk> ChunkRanges(std::size_t n, std::size_t chunk_len,
                               std::size_t overlap) {
  if (overlap >= chunk_len) {
    throw ParameterError("chunk overlap " + std::to_string(overlap) +
                         " must be smaller than the chunk length " +
                         std::to_string(chunk_len));
  }
  const std::size_t stride = chunk_len - overlap;
  std::vector<Chunk> chunks;
  for (std::size_t start = 0; start < n; start += stride) {
    const std::size_t end = std::min(start + chunk_len, n);
    chunks.push_back(Chunk{chunks.size(), start, end});
    if (end == n) break;
  }
  return chunks;
}

std::vector<Chunk> ChunkTokens(std::span<const Token> tokens,
                               std::size_t chunk_len, std::size_t overlap) {
  return ChunkRanges(tokens.size(), chunk_len, overlap);
}

std::vector<Token> TruncateTokens(std::span<const Token> tokens,
                                  std::size_t max_len) {
  if (max_len == 0) throw ParameterError("max_len must be at least 1");
  const std::size_t keep = std::min(max_len, tokens.size());
  return std::vector<Token>(tokens.begin(), tokens.begin() + keep);
}

std::vector<Token> TailTokens(std::span<const Token> tokens, std::size_t n) {
  const std::size_t keep = std::min(n, tokens.size());
  return std::vector<Token>(tokens.end() - keep, tokens.end());
}

}  // namespace legalpipe
