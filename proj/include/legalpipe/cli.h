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

// Batch driver behind the `legalpipe` executable.
//
// Subcommands: normalize, bio encode, bio decode, fuse, chunk, tail, decide,
// explain, eval ner, eval clf, eval rouge, stats. Outputs are byte-identical
// for identical inputs and flags, whatever the number of jobs.

#ifndef LEGALPIPE_CLI_H_
#define LEGALPIPE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace legalpipe::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDataError = 1;   // parse or validation failure
inline constexpr int kExitUsageError = 2;  // bad flags or parameter ranges

// Environment variable holding the default number of worker threads.
inline constexpr const char* kJobsEnv = "LEGALPIPE_JOBS";

// `args` excludes the program name. "-" as a path means stdin/stdout.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace legalpipe::cli

#endif  // LEGALPIPE_CLI_H_
