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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "antimagic/instance_gen.h"
#include "antimagic/io.h"
#include "antimagic/verifier.h"
#include "gtest/gtest.h"

namespace antimagic::cli {
namespace {

namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("antimagic_cmd_" + std::string(::testing::UnitTest::GetInstance()
                                               ->current_test_info()
                                               ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
  }

  static void put(const std::string& file, const std::string& text) {
    std::ofstream(file, std::ios::binary) << text;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CommandsTest, GenWritesK23) {
  EXPECT_EQ(cmd_gen({2, 3, 3, 2, 1, path("g.txt")}, out_, err_), kExitOk);
  EXPECT_EQ(slurp(path("g.txt")), graph_to_string(complete_bipartite(2, 3)));
}

TEST_F(CommandsTest, GenInfeasibleIsInputError) {
  EXPECT_EQ(cmd_gen({3, 3, 2, 3, 0, ""}, out_, err_), kExitInputError);
  EXPECT_NE(err_.str().find("Infeasible"), std::string::npos);
}

TEST_F(CommandsTest, GenIsDeterministic) {
  cmd_gen({6, 9, 3, 2, 11, path("a.txt")}, out_, err_);
  cmd_gen({6, 9, 3, 2, 11, path("b.txt")}, out_, err_);
  EXPECT_EQ(slurp(path("a.txt")), slurp(path("b.txt")));
}

TEST_F(CommandsTest, LabelStar) {
  put(path("s.txt"), graph_to_string(star(3)));
  EXPECT_EQ(cmd_label({path("s.txt"), path("s.lab"), "", 0}, out_, err_), kExitOk);
  EXPECT_EQ(slurp(path("s.lab")),
            "0 0 0 XY 1\n1 0 1 XY 2\n2 0 2 XY 3\n# case T1 verified true\n");
  EXPECT_NE(err_.str().find("case T1 edges 3"), std::string::npos);
}

TEST_F(CommandsTest, LabelEightCycleToStdout) {
  put(path("c8.txt"), graph_to_string(even_cycle(4)));
  EXPECT_EQ(cmd_label({path("c8.txt"), "", "", 9}, out_, err_), kExitOk);
  EXPECT_NE(out_.str().find("# case T2_S2 verified true"), std::string::npos);
  EXPECT_NE(err_.str().find("oracle found a witness"), std::string::npos);
}

TEST_F(CommandsTest, LabelMalformedAndNotBiregular) {
  put(path("bad.txt"), "bipartite 1 1\n");
  EXPECT_EQ(cmd_label({path("bad.txt"), "", "", 0}, out_, err_), kExitInputError);
  EXPECT_NE(err_.str().find("ParseError"), std::string::npos);
  put(path("path.txt"), "bipartite 2 2 3\n0 0\n0 1\n1 1\n");
  EXPECT_EQ(cmd_label({path("path.txt"), "", "", 0}, out_, err_), kExitInputError);
  EXPECT_EQ(cmd_label({path("missing.txt"), "", "", 0}, out_, err_), kExitInputError);
}

TEST_F(CommandsTest, SwappedInputIsReportedInCallerSides) {
  const BipartiteGraph g = complete_bipartite(3, 2);
  put(path("g.txt"), graph_to_string(g));
  ASSERT_EQ(cmd_label({path("g.txt"), path("g.lab"), "", 0}, out_, err_), kExitOk);
  std::ifstream in(path("g.lab"));
  const LabelingFile parsed = parse_labeling(in, g);
  EXPECT_TRUE(verify_labeling(g, parsed.oriented.orientation,
                              parsed.oriented.labeling).ok);
  EXPECT_EQ(parsed.case_tag, "T2_S_ODD");
}

TEST_F(CommandsTest, RoundTripAndMutations) {
  cmd_gen({6, 9, 3, 2, 4, path("g.txt")}, out_, err_);
  ASSERT_EQ(cmd_label({path("g.txt"), path("g.lab"), "", 0}, out_, err_), kExitOk);
  EXPECT_EQ(cmd_verify({path("g.txt"), path("g.lab")}, out_, err_), kExitOk);

  const BipartiteGraph g = read_graph_file(path("g.txt"));
  std::ifstream in(path("g.lab"));
  const LabelingFile parsed = parse_labeling(in, g);

  // Find a swap of two labels that creates a collision.
  bool found = false;
  for (EdgeId a = 0; a < g.edge_count() && !found; ++a) {
    for (EdgeId b = a + 1; b < g.edge_count() && !found; ++b) {
      OrientedLabeling mutated = parsed.oriented;
      std::swap(mutated.labeling.label[a], mutated.labeling.label[b]);
      if (verify_labeling(g, mutated.orientation, mutated.labeling).ok) continue;
      found = true;
      std::ofstream file(path("swapped.lab"));
      write_labeling(file, g, mutated, "T2_S_ODD", true);
    }
  }
  ASSERT_TRUE(found);
  std::ostringstream out;
  EXPECT_EQ(cmd_verify({path("g.txt"), path("swapped.lab")}, out, err_),
            kExitVerifyFailed);
  EXPECT_NE(out.str().find("collision:"), std::string::npos);

  OrientedLabeling dup = parsed.oriented;
  dup.labeling.label[0] = dup.labeling.label[1];
  {
    std::ofstream file(path("dup.lab"));
    write_labeling(file, g, dup, "T2_S_ODD", true);
  }
  std::ostringstream dup_out;
  EXPECT_EQ(cmd_verify({path("g.txt"), path("dup.lab")}, dup_out, err_),
            kExitVerifyFailed);
  EXPECT_NE(dup_out.str().find("bijection FAILED"), std::string::npos);

  put(path("short.lab"), "0 0 0 XY 1\n");
  EXPECT_EQ(cmd_verify({path("g.txt"), path("short.lab")}, out_, err_),
            kExitInputError);
}

TEST_F(CommandsTest, GlobBatch) {
  put(path("a.graph"), graph_to_string(even_cycle(3)));
  put(path("b.graph"), graph_to_string(complete_bipartite(3, 3)));
  const std::string outdir = path("out");
  EXPECT_EQ(cmd_label({"", outdir, path("*.graph"), 0}, out_, err_), kExitOk);
  EXPECT_TRUE(fs::exists(outdir + "/a.graph.lab"));
  EXPECT_TRUE(fs::exists(outdir + "/b.graph.lab"));
  EXPECT_EQ(cmd_label({"", "", path("*.none"), 0}, out_, err_), kExitInputError);
}

TEST_F(CommandsTest, LabelOutputIsDeterministic) {
  cmd_gen({12, 24, 4, 2, 3, path("g.txt")}, out_, err_);
  cmd_label({path("g.txt"), path("one.lab"), "", 0}, out_, err_);
  cmd_label({path("g.txt"), path("two.lab"), "", 0}, out_, err_);
  EXPECT_EQ(slurp(path("one.lab")), slurp(path("two.lab")));
}

TEST(RunSummaryTest, Format) {
  RunSummary s{"T1", 3, -6, -6, 1, 3, true, 0.5};
  EXPECT_EQ(to_string(s),
            "case T1 edges 3 x_sums [-6, -6] y_sums [1, 3] verified true time 0.5 ms");
}

}  // namespace
}  // namespace antimagic::cli
