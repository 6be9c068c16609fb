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

// Internal helper shared by the corpus codecs and the CLI.

#ifndef LEGALPIPE_SRC_JSON_RECORDS_H_
#define LEGALPIPE_SRC_JSON_RECORDS_H_

#include <ostream>

#include "json.hpp"
#include "legalpipe/errors.h"

namespace legalpipe::internal {

// Writes "[\n<rec>,\n<rec>\n]\n" with one compact record per line, or
// "[]\n" when empty. Output is byte-stable for identical records.
template <typename Records>
void WriteRecordArray(const Records& records, std::ostream& out) {
  if (records.empty()) {
    out << "[]\n";
  } else {
    out << "[\n";
    for (std::size_t i = 0; i < records.size(); ++i) {
      out << records[i].dump(-1, ' ', false,
                             nlohmann::json::error_handler_t::strict);
      out << (i + 1 < records.size() ? ",\n" : "\n");
    }
    out << "]\n";
  }
  if (!out) throw Error("write failed");
}

}  // namespace legalpipe::internal

#endif  // LEGALPIPE_SRC_JSON_RECORDS_H_
