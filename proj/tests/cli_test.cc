// Copyright 2026 The Tiebreak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tiebreak/cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace tiebreak::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args, bool align = false) {
  std::ostringstream out, err;
  int code = Run(args, out, err, align);
  return {code, out.str(), err.str()};
}

std::string GamePath(const std::string& name) {
  return std::string(TIEBREAK_GAMES_DIR) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  std::filesystem::path path =
      std::filesystem::path(::testing::TempDir()) / name;
  std::ofstream(path) << text;
  return path.string();
}

const std::string kIndifference = GamePath("indifference.gdl");

TEST(CliTest, ValidateShippedFiles) {
  for (const char* name :
       {"indifference.gdl", "tft_reduced.gdl", "three_stage.gdl"}) {
    Result r = Invoke({"validate", GamePath(name)});
    EXPECT_EQ(r.code, kExitOk) << name << r.err;
    EXPECT_EQ(r.out, "valid\n");
  }
}

TEST(CliTest, ValidateReportsParsePosition) {
  std::string path =
      WriteTemp("short.gdl", "(game players 2\n  (leaf (1)))\n");
  Result r = Invoke({"validate", path});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find(path + ":2:3: expected 2 payoffs, found 1"),
            std::string::npos)
      << r.err;
}

TEST(CliTest, SolveIndifferentExitsTwo) {
  Result r = Invoke({"solve", kIndifference});
  EXPECT_EQ(r.code, kExitIndifferent);
  EXPECT_EQ(r.out, "indifferent\tmover\tactions\n[0]\t2\tL,R\n");
  EXPECT_NE(r.err.find("[0]"), std::string::npos);
}

TEST(CliTest, SolveGeneric) {
  Result r = Invoke({"solve", GamePath("tft_reduced.gdl")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "node\tmover\tbranch\taction\n[]\t1\t1\tR\nvalue\t1\t1\n");
}

TEST(CliTest, SolveWithPolicy) {
  Result r = Invoke({"solve", kIndifference, "--policy", "profile:1=F,2=F"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "node\tmover\tbranch\taction\n"
            "[]\t1\t1\tR\n"
            "[1]\t2\t0\tL\n"
            "value\t1\t1\n");
  Result bad = Invoke({"solve", kIndifference, "--policy", "friendly:2"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("--policy"), std::string::npos);
  Result malformed = Invoke({"solve", kIndifference, "--policy", "nice"});
  EXPECT_EQ(malformed.code, kExitUsage);
  EXPECT_NE(malformed.err.find("--policy"), std::string::npos);
}

TEST(CliTest, Spe) {
  Result r = Invoke({"spe", kIndifference});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "p1\tp2\toutcome\tu1\tu2\n"
            "L\tLL\tA\t1\t0\n"
            "L\tLR\tA\t1\t0\n"
            "L\tRR\tB\t0\t0\n"
            "R\tLL\tC\t1\t1\n"
            "R\tRL\tC\t1\t1\n"
            "R\tRR\tD\t0\t1\n");
}

TEST(CliTest, Nash) {
  Result r = Invoke({"nash", kIndifference});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "p1\tp2\tu1\tu2\n"
            "L\tLL\t1\t0\n"
            "L\tLR\t1\t0\n"
            "L\tRR\t0\t0\n"
            "R\tLL\t1\t1\n"
            "R\tRL\t1\t1\n"
            "R\tRR\t0\t1\n");
}

TEST(CliTest, NormalFormTable) {
  Result r = Invoke({"nf", kIndifference});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "p1\tp2\tu1\tu2\n"
            "L\tLL\t1\t0\n"
            "L\tLR\t1\t0\n"
            "L\tRL\t0\t0\n"
            "L\tRR\t0\t0\n"
            "R\tLL\t1\t1\n"
            "R\tLR\t0\t1\n"
            "R\tRL\t1\t1\n"
            "R\tRR\t0\t1\n");
  Result reduced = Invoke({"nf", GamePath("tft_reduced.gdl")});
  EXPECT_EQ(reduced.out, "p1\tp2\tu1\tu2\nL\t-\t0\t0\nR\t-\t1\t1\n");
}

TEST(CliTest, Scenarios) {
  Result r = Invoke({"scenarios", kIndifference});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "profile\tu1\tu2\tpath\n"
            "1=F,2=F\t1\t1\tR,L\n"
            "1=F,2=U\t0\t1\tR,R\n"
            "1=U,2=F\t1\t0\tL,L\n"
            "1=U,2=U\t0\t0\tL,R\n");
}

TEST(CliTest, Friendliness) {
  Result r = Invoke({"friendliness", kIndifference});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "node\tmover\taction\tplayer\tclass\tscore\n"
            "[]\t1\tL\t2\tunfriendly\t0\n"
            "[]\t1\tR\t2\tfriendly\t1\n"
            "[0]\t2\tL\t1\tfriendly\t1\n"
            "[0]\t2\tR\t1\tunfriendly\t0\n"
            "[1]\t2\tL\t1\tfriendly\t1\n"
            "[1]\t2\tR\t1\tunfriendly\t0\n");
}

TEST(CliTest, SimulateStage) {
  Result r = Invoke({"simulate", "--p1", "tft", "--p2", "allu", "--rounds",
                     "3", "--stage", "simind"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "round\tp1\tp2\tu1\tu2\n"
            "1\tF\tU\t0\t1\n"
            "2\tU\tU\t0\t0\n"
            "3\tU\tU\t0\t0\n"
            "cumulative\t0\t1\n");
  Result implicit_stage =
      Invoke({"simulate", "--p1", "tft", "--p2", "allu", "--rounds", "3"});
  EXPECT_EQ(implicit_stage.out, r.out);
}

TEST(CliTest, SimulateAlternating) {
  Result r = Invoke({"simulate", "--p1", "tft", "--p2", "allu", "--rounds",
                     "2", "--alternating"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "move\tplayer\taction\tu1\tu2\n"
            "1\t1\tF\t0\t1\n"
            "2\t2\tU\t0\t0\n"
            "3\t1\tU\t0\t0\n"
            "4\t2\tU\t0\t0\n"
            "cumulative\t0\t1\n");
}

TEST(CliTest, UsageErrors) {
  std::vector<std::vector<std::string>> cases = {
      {},
      {"bogus"},
      {"solve"},
      {"solve", "/nonexistent/file.gdl"},
      {"solve", kIndifference, "--policy"},
      {"simulate", "--p1", "tft", "--p2", "allu"},
      {"simulate", "--p1", "tft", "--p2", "grim", "--rounds", "3"},
      {"simulate", "--p1", "tft", "--p2", "allu", "--rounds", "0"},
      {"simulate", "--p1", "tft", "--p2", "allu", "--rounds", "x"},
      {"simulate", "--p1", "tft", "--p2", "allu", "--rounds", "2", "--stage",
       "pd"},
      {"simulate", "--p1", "tft", "--p2", "allu", "--rounds", "2", "--stage",
       "simind", "--alternating"},
      {"nash", kIndifference, "extra"},
  };
  for (const auto& args : cases) {
    Result r = Invoke(args);
    std::string joined;
    for (const auto& a : args) joined += a + " ";
    EXPECT_EQ(r.code, kExitUsage) << joined << "\n" << r.err;
    EXPECT_FALSE(r.err.empty()) << joined;
  }
  EXPECT_NE(Invoke({"simulate", "--p1", "tft", "--p2", "allu", "--rounds",
                    "0"})
                .err.find("--rounds"),
            std::string::npos);
  EXPECT_NE(Invoke({"solve", "/nonexistent/file.gdl"}).err.find(
                "/nonexistent/file.gdl"),
            std::string::npos);
}

TEST(CliTest, HelpExitsZero) {
  Result r = Invoke({"--help"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("simulate"), std::string::npos);
}

TEST(CliTest, AlignedOutputHasNoTabs) {
  Result r = Invoke({"nash", kIndifference}, /*align=*/true);
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.find('\t'), std::string::npos);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("p1", 0), 0u);
  EXPECT_NE(r.out.find("R   RR  0   1"), std::string::npos) << r.out;
}

TEST(CliTest, DeterministicAndOnlyKnownExitCodes) {
  std::vector<std::vector<std::string>> runs;
  for (const char* cmd :
       {"validate", "solve", "spe", "scenarios", "friendliness", "nf",
        "nash"}) {
    for (const char* name :
         {"indifference.gdl", "tft_reduced.gdl", "three_stage.gdl"}) {
      runs.push_back({cmd, GamePath(name)});
    }
  }
  for (const char* a : {"tft", "allf", "allu"}) {
    for (const char* b : {"tft", "allf", "allu"}) {
      runs.push_back({"simulate", "--p1", a, "--p2", b, "--rounds", "4"});
      runs.push_back(
          {"simulate", "--p1", a, "--p2", b, "--rounds", "3", "--alternating"});
    }
  }
  for (const auto& args : runs) {
    Result first = Invoke(args);
    Result second = Invoke(args);
    EXPECT_EQ(first.out, second.out);
    EXPECT_EQ(first.code, second.code);
    EXPECT_TRUE(first.code == kExitOk || first.code == kExitUsage ||
                first.code == kExitIndifferent);
  }
}

}  // namespace
}  // namespace tiebreak::cli
