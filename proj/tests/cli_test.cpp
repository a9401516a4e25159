// Copyright 2026 The argcog Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "argcog/cli.hpp"

namespace argcog {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("argcog_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
    write("f1.apx", "arg(a).\narg(b).\natt(a,a).\natt(a,b).\n");
    write("f2.apx", "arg(a).\narg(b).\narg(c).\natt(a,b).\natt(b,c).\n");
    write("f2.tgf", "a\nb\nc\n#\na b\nb c\n");
    write("f3.apx", "arg(a).\narg(b).\narg(c).\narg(d).\n"
                    "att(a,b).\natt(b,c).\natt(c,a).\natt(b,d).\n");
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(dir_ / name) << text;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, SolveAdmissible) {
  const auto r = run({"solve", "--semantics", "admissible", path("f1.apx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{}\n");
}

TEST_F(CliTest, SolveMaximalWeakAdmissible) {
  const auto r = run({"solve", "--semantics", "weak-admissible", "--maximal", path("f2.apx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{a,c}\n");
}

TEST_F(CliTest, SolveFromStdinAndTgf) {
  auto r = run({"solve", "--semantics", "cogent", "-"},
               "arg(a).\narg(b).\natt(a,a).\natt(a,b).\n");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{}\n{b}\n");
  r = run({"solve", "--semantics", "conflict-free", "--format", "json", path("f2.tgf")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "[[],[\"a\"],[\"b\"],[\"c\"],[\"a\",\"c\"]]\n");
  r = run({"solve", "--semantics", "weak-admissible", "--input-format", "tgf", "-"},
          "a\nb\nc\n#\na b\nb c\n");
  EXPECT_EQ(r.out, "{}\n{a}\n{c}\n{a,c}\n");
}

TEST_F(CliTest, Compare) {
  auto r = run({"compare", path("f3.apx")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("maximal-weak-admissible: {d}\n"), std::string::npos);
  EXPECT_NE(r.out.find("maximal-agreement: false\n"), std::string::npos);
  r = run({"compare", "--format", "json", path("f2.apx")});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["summary"]["maximal-agreement"], true);
  EXPECT_EQ(doc["semantics"]["maximal-cogent"], nlohmann::json::parse(R"([["a","c"]])"));
}

TEST_F(CliTest, GenIsDeterministic) {
  const auto a = run({"gen", "--n", "6", "--p", "0.3", "--seed", "5", "--self-attacks"});
  const auto b = run({"gen", "--n", "6", "--p", "0.3", "--seed", "5", "--self-attacks"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("arg(a0).\n", 0), 0u);
  const auto tgf = run({"gen", "--n", "2", "--p", "1", "--seed", "1", "--format", "tgf"});
  EXPECT_EQ(tgf.out, "a0\na1\n#\na0 a1\na1 a0\n");
}

TEST_F(CliTest, CheckExhaustive) {
  const auto r = run({"check", "--exhaustive-n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("frameworks: 512\n"), std::string::npos);
  EXPECT_NE(r.out.find("inclusion-violations: 0\n"), std::string::npos);
  EXPECT_NE(r.out.find("lemma-violations: 0\n"), std::string::npos);
}

TEST_F(CliTest, CheckRandomIsReproducible) {
  const std::vector<std::string> args{"check", "--random", "30", "--min-n", "3",
                                      "--max-n", "6", "--seed", "9", "--threads", "3"};
  const auto a = run(args);
  const auto b = run(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("random-frameworks: 30\n"), std::string::npos);
}

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"solve", path("f1.apx")}).code, 2);
  EXPECT_EQ(run({"solve", "--semantics", "preferred", path("f1.apx")}).code, 2);
  EXPECT_EQ(run({"solve", "--semantics", "cogent", path("missing.apx")}).code, 2);
  EXPECT_EQ(run({"check"}).code, 2);
  EXPECT_EQ(run({"check", "--exhaustive-n", "5"}).code, 2);
  EXPECT_EQ(run({"gen", "--n", "3", "--p", "2", "--seed", "1"}).code, 2);
  write("bad.apx", "arg(a).\nwhat\n");
  const auto r = run({"solve", "--semantics", "admissible", path("bad.apx")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST_F(CliTest, HelpExitsZero) {
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, SizeLimitsAndOverride) {
  const auto big = run({"gen", "--n", "13", "--p", "0.2", "--seed", "1"});
  write("big.apx", big.out);
  auto r = run({"solve", "--semantics", "weak-admissible", path("big.apx")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--max-args"), std::string::npos);
  r = run({"solve", "--semantics", "weak-admissible", "--max-args", "13", path("big.apx")});
  EXPECT_EQ(r.code, 0);
  r = run({"solve", "--semantics", "cogent", path("big.apx")});
  EXPECT_EQ(r.code, 0);
}

}  // namespace
}  // namespace argcog
