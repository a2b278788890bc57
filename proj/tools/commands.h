// Copyright 2026 The Antimagic Orientation Authors.
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

// Subcommands of the `antimagic` tool, callable without a process boundary.

#ifndef ANTIMAGIC_TOOLS_COMMANDS_H_
#define ANTIMAGIC_TOOLS_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "antimagic/graph.h"

namespace antimagic::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConstructionFailed = 3;

struct GenOptions {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::uint64_t seed = 0;
  std::string output;  // empty: standard output
};

struct LabelOptions {
  std::string input;
  std::string output;  // file, or directory when `glob` is set; empty: stdout
  std::string glob;    // batch mode: label every matching graph file
  int oracle_max_edges = 0;  // > 0: also run the exhaustive oracle
};

struct VerifyOptions {
  std::string input;
  std::string labeling;
};

struct RunSummary {
  std::string case_tag;
  EdgeId edge_count = 0;
  std::int64_t min_x_sum = 0;
  std::int64_t max_x_sum = 0;
  std::int64_t min_y_sum = 0;
  std::int64_t max_y_sum = 0;
  bool verified = false;
  double elapsed_ms = 0;
};

std::string to_string(const RunSummary& summary);

// Each command writes results to `out` (when no output path is given) and
// diagnostics and summaries to `err`, and returns the exit code.
int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err);
int cmd_label(const LabelOptions& options, std::ostream& out,
              std::ostream& err);
int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err);

}  // namespace antimagic::cli

#endif  // ANTIMAGIC_TOOLS_COMMANDS_H_
