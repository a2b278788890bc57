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

// antimagic gen | label | verify

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"

int main(int argc, char** argv) {
  namespace cli = antimagic::cli;
  CLI::App app{"Antimagic orientations of biregular bipartite graphs"};
  app.require_subcommand(1);

  cli::GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("--x", gen.x, "Number of X vertices")->required();
  gen_cmd->add_option("--y", gen.y, "Number of Y vertices")->required();
  gen_cmd->add_option("--s", gen.s, "Degree of X vertices")->required();
  gen_cmd->add_option("--t", gen.t, "Degree of Y vertices")->required();
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  gen_cmd->add_option("-o,--output", gen.output, "Output graph file");

  cli::LabelOptions label;
  CLI::App* label_cmd =
      app.add_subcommand("label", "Construct an antimagic orientation");
  auto* input = label_cmd->add_option("-i,--input", label.input, "Graph file");
  auto* pattern = label_cmd->add_option(
      "--glob", label.glob, "Label every file matching this pattern");
  input->excludes(pattern);
  label_cmd->add_option("-o,--output", label.output,
                        "Labeling file (directory with --glob)");
  label_cmd->add_option("--oracle-max-edges", label.oracle_max_edges,
                        "Also run the exhaustive oracle up to this size");

  cli::VerifyOptions verify;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check a labeling file against a graph");
  verify_cmd->add_option("-i,--input", verify.input, "Graph file")->required();
  verify_cmd->add_option("-l,--labeling", verify.labeling, "Labeling file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cli::kExitInputError;
  }
  if (*gen_cmd) return cli::cmd_gen(gen, std::cout, std::cerr);
  if (*label_cmd) {
    if (label.input.empty() && label.glob.empty()) {
      std::cerr << "label: one of --input or --glob is required\n";
      return cli::kExitInputError;
    }
    return cli::cmd_label(label, std::cout, std::cerr);
  }
  return cli::cmd_verify(verify, std::cout, std::cerr);
}
