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

#include "commands.h"

#include <glob.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "antimagic/errors.h"
#include "antimagic/instance_gen.h"
#include "antimagic/io.h"
#include "antimagic/labeler.h"
#include "antimagic/verifier.h"

namespace antimagic::cli {
namespace {

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedGraph:
    case ErrorCode::kParseError:
    case ErrorCode::kNotBiregular:
    case ErrorCode::kEmptyGraph:
    case ErrorCode::kInfeasible:
    case ErrorCode::kRetriesExhausted:
    case ErrorCode::kTooLarge:
      return true;
    default:
      return false;
  }
}

// Writes `text` to `path`, or to `out` when `path` is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kParseError, "cannot write " + path);
  file << text;
  if (!file) throw Error(ErrorCode::kParseError, "write failed for " + path);
}

std::vector<std::string> expand_glob(const std::string& pattern) {
  glob_t matches{};
  const int status = ::glob(pattern.c_str(), 0, nullptr, &matches);
  std::vector<std::string> paths;
  if (status == 0) {
    for (std::size_t i = 0; i < matches.gl_pathc; ++i) {
      paths.emplace_back(matches.gl_pathv[i]);
    }
  }
  globfree(&matches);
  std::sort(paths.begin(), paths.end());
  return paths;
}

RunSummary summarize(const AntimagicResult& result, EdgeId edge_count,
                     double elapsed_ms) {
  RunSummary summary;
  summary.case_tag = std::string(to_string(result.tag));
  summary.edge_count = edge_count;
  const auto& xs = result.report.sums.x_sums;
  const auto& ys = result.report.sums.y_sums;
  if (!xs.empty()) {
    summary.min_x_sum = *std::min_element(xs.begin(), xs.end());
    summary.max_x_sum = *std::max_element(xs.begin(), xs.end());
  }
  if (!ys.empty()) {
    summary.min_y_sum = *std::min_element(ys.begin(), ys.end());
    summary.max_y_sum = *std::max_element(ys.begin(), ys.end());
  }
  summary.verified = result.report.ok;
  summary.elapsed_ms = elapsed_ms;
  return summary;
}

int label_one(const std::string& input, const std::string& output,
              int oracle_max_edges, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  try {
    const BipartiteGraph graph = read_graph_file(input);
    const AntimagicResult result = antimagic_orientation(graph);
    std::ostringstream text;
    write_labeling(text, graph, result.oriented, to_string(result.tag),
                   result.report.ok);
    emit(output, text.str(), out);
    const double elapsed_ms = std::chrono::duration<double, std::milli>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
    err << input << ": " << to_string(summarize(result, graph.edge_count(),
                                                elapsed_ms))
        << "\n";
    if (oracle_max_edges > 0 && graph.edge_count() <= oracle_max_edges) {
      const OracleResult oracle = brute_force_oracle(graph, oracle_max_edges);
      err << input << ": oracle "
          << (oracle.witness ? "found a witness" : "found no witness")
          << (oracle.searched == SearchedSpace::kAllXtoY
                  ? " with all edges X to Y\n"
                  : " over all orientations\n");
    }
    return result.report.ok ? kExitOk : kExitVerifyFailed;
  } catch (const ConstructionFailed& e) {
    err << input << ": " << e.what() << "\n";
    return kExitConstructionFailed;
  } catch (const Error& e) {
    err << input << ": " << e.what() << "\n";
    return is_input_error(e.code()) ? kExitInputError
                                    : kExitConstructionFailed;
  }
}

}  // namespace

std::string to_string(const RunSummary& summary) {
  std::ostringstream text;
  text << "case " << summary.case_tag << " edges " << summary.edge_count
       << " x_sums [" << summary.min_x_sum << ", " << summary.max_x_sum
       << "] y_sums [" << summary.min_y_sum << ", " << summary.max_y_sum
       << "] verified " << (summary.verified ? "true" : "false") << " time "
       << summary.elapsed_ms << " ms";
  return text.str();
}

int cmd_gen(const GenOptions& options, std::ostream& out, std::ostream& err) {
  try {
    const BipartiteGraph graph = gen_biregular(
        {options.x, options.y, options.s, options.t, options.seed, 1000});
    emit(options.output, graph_to_string(graph), out);
    return kExitOk;
  } catch (const Error& e) {
    err << "gen: " << e.what() << "\n";
    return kExitInputError;
  }
}

int cmd_label(const LabelOptions& options, std::ostream& out,
              std::ostream& err) {
  if (options.glob.empty()) {
    return label_one(options.input, options.output, options.oracle_max_edges,
                     out, err);
  }
  const std::vector<std::string> inputs = expand_glob(options.glob);
  if (inputs.empty()) {
    err << "label: no files match " << options.glob << "\n";
    return kExitInputError;
  }
  if (!options.output.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(options.output, ec);
    if (ec) {
      err << "label: cannot create " << options.output << "\n";
      return kExitInputError;
    }
  }
  int worst = kExitOk;
  for (const std::string& input : inputs) {
    std::string output = input + ".lab";
    if (!options.output.empty()) {
      output = (std::filesystem::path(options.output) /
                (std::filesystem::path(input).filename().string() + ".lab"))
                   .string();
    }
    worst = std::max(worst, label_one(input, output, options.oracle_max_edges,
                                      out, err));
  }
  return worst;
}

int cmd_verify(const VerifyOptions& options, std::ostream& out,
               std::ostream& err) {
  try {
    const BipartiteGraph graph = read_graph_file(options.input);
    std::ifstream file(options.labeling);
    if (!file) {
      throw Error(ErrorCode::kParseError, "cannot open " + options.labeling);
    }
    const LabelingFile labels = parse_labeling(file, graph);
    const VerifyReport report =
        verify_labeling(graph, labels.oriented.orientation,
                        labels.oriented.labeling);
    if (report.ok) {
      out << "verified true\n";
      return kExitOk;
    }
    out << "verified false\n" << describe(report);
    return kExitVerifyFailed;
  } catch (const Error& e) {
    err << "verify: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace antimagic::cli
