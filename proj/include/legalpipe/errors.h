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

#ifndef LEGALPIPE_ERRORS_H_
#define LEGALPIPE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace legalpipe {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, bad CoNLL columns, invalid UTF-8, unknown tags.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a data invariant (span bounds, taxonomy,
// duplicate ids or spans, overlapping spans, misaligned boundaries).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A span whose content disappears entirely under normalization.
class RemapError : public Error {
 public:
  using Error::Error;
};

// Out-of-range stage parameter (overlap >= chunk_len, n_words == 0, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

}  // namespace legalpipe

#endif  // LEGALPIPE_ERRORS_H_
