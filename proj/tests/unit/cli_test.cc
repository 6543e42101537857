// Copyright 2026 The kscheck Authors
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

#include "kscheck/cli.h"

#include <sstream>

#include "gtest/gtest.h"

namespace kscheck::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kscheck");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

TEST(Classify, Examples) {
  auto r = run_cli({"classify", "2", "3", "fermion", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "dim=3"));
  EXPECT_TRUE(has_line(r.out, "class=SICPossible"));
  EXPECT_TRUE(has_line(r.out, "seed=1"));

  r = run_cli({"--format", "records", "classify", "3", "3", "fermion"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "dim=1"));
  EXPECT_TRUE(has_line(r.out, "class=DimensionOne"));

  r = run_cli({"classify", "3", "2", "fermion", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "dim=0"));
  EXPECT_TRUE(has_line(r.out, "class=NoPhysicalStates"));
}

TEST(Classify, BadArguments) {
  EXPECT_EQ(run_cli({"classify", "1", "3", "boson"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "2", "3", "anyon"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "2", "x", "boson"}).code, 2);
  EXPECT_EQ(run_cli({"classify", "2"}).code, 2);
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "classify", "2", "3", "boson"}).code, 2);
}

TEST(Help, ExitsZero) { EXPECT_EQ(run_cli({"--help"}).code, 0); }

TEST(Basis, PaperFermion) {
  const auto r = run_cli({"basis", "2", "3", "fermion", "--paper", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "vectors=3"));
  EXPECT_TRUE(has_line(r.out, "vector.1=|+0⟩ - |0+⟩"));
  EXPECT_TRUE(has_line(r.out, "vector.2=|+-⟩ - |-+⟩"));
  EXPECT_TRUE(has_line(r.out, "vector.3=|0-⟩ - |-0⟩"));
  EXPECT_TRUE(has_line(r.out, "normsq=2,2,2"));
  EXPECT_TRUE(has_line(r.out, "orthogonal=true"));
  EXPECT_TRUE(has_line(r.out, "symmetry=true"));
}

TEST(Basis, PaperBoson) {
  const auto r = run_cli({"basis", "2", "3", "boson", "--paper", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "vectors=6"));
  EXPECT_TRUE(has_line(r.out, "normsq=1,2,6,2,1,3"));
}

TEST(Basis, GeneratedAndEmpty) {
  auto r = run_cli({"basis", "2", "2", "boson", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "vectors=3"));
  r = run_cli({"basis", "3", "2", "fermion"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("empty subspace"), std::string::npos);
  EXPECT_EQ(run_cli({"basis", "3", "3", "boson", "--paper"}).code, 2);
}

TEST(Ksset, A3Frames) {
  const auto r = run_cli({"ksset", "A3", "frames", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "frames=17"));
  EXPECT_TRUE(has_line(r.out, "frame.10=(1,1,1) (1,-1,0) (1,1,-2)"));
  EXPECT_TRUE(has_line(r.out, "shared.(1,0,0)=1.1 2.1 5.1 6.1"));
  EXPECT_TRUE(has_line(r.out, "shared.(0,1,-1)=2.3 11.2"));
}

TEST(Ksset, A3Bound) {
  const auto r = run_cli({"ksset", "A3", "bound", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "algebraic_bound=17"));
  EXPECT_TRUE(has_line(r.out, "noncontextual_bound=17"));
  EXPECT_TRUE(has_line(r.out, "witness_beta=17"));
  EXPECT_TRUE(has_line(r.out, "quantum_value=17"));
  EXPECT_TRUE(has_line(r.out, "state_independent=true"));
}

TEST(Ksset, Color) {
  auto r = run_cli({"ksset", "S6", "color", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "result=NotColorable"));
  EXPECT_TRUE(has_line(r.out, "frames=16"));
  r = run_cli({"ksset", "A3", "color", "--rule", "frames-only", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "result=Colorable"));
  EXPECT_TRUE(has_line(r.out, "witness_valid=true"));
  EXPECT_EQ(run_cli({"ksset", "A3", "color", "--rule", "loose"}).code, 2);
}

TEST(Ksset, Quantum) {
  auto r = run_cli({"ksset", "A3", "quantum", "--state", "1,2,3", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "beta_qm=17"));
  EXPECT_TRUE(has_line(r.out, "state=(1,2,3)"));
  r = run_cli({"--seed", "42", "ksset", "A3", "quantum", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "seed=42"));
  EXPECT_TRUE(has_line(r.out, "state_source=random"));
  EXPECT_TRUE(has_line(r.out, "beta_qm=17"));
  EXPECT_EQ(run_cli({"ksset", "A3", "quantum", "--state", "0,0,0"}).code, 2);
  EXPECT_EQ(run_cli({"ksset", "A3", "quantum", "--state", "1,2"}).code, 2);
}

TEST(Ksset, DimensionRestrictions) {
  auto r = run_cli({"ksset", "S4", "bound"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("three-dimensional"), std::string::npos);
  EXPECT_EQ(run_cli({"ksset", "S6", "quantum"}).code, 2);
}

TEST(Ksset, InputErrors) {
  EXPECT_EQ(run_cli({"ksset", "S5", "show"}).code, 2);
  EXPECT_EQ(run_cli({"ksset", "A3", "paint"}).code, 2);
  EXPECT_EQ(run_cli({"ksset", "show"}).code, 2);
  EXPECT_EQ(run_cli({"ksset", "--file", "/nonexistent/set.txt", "show"}).code, 2);
  EXPECT_EQ(run_cli({"ksset", "A3", "--file", KSCHECK_FIXTURE_DIR "/a3_tampered.txt",
                     "show"})
                .code,
            2);
}

TEST(Ksset, FileInput) {
  const auto r = run_cli({"ksset", "--file", KSCHECK_FIXTURE_DIR "/a3_tampered.txt",
                          "show", "--format", "records"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "size=30"));
  const auto bad = run_cli({"ksset", "--file", KSCHECK_FIXTURE_DIR "/malformed.txt",
                            "frames"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 4"), std::string::npos) << bad.err;
}

TEST(Output, DeterministicAndTimingOptIn) {
  const auto a = run_cli({"ksset", "A3", "bound"});
  const auto b = run_cli({"ksset", "A3", "bound"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.find("elapsed"), std::string::npos);
  const auto t = run_cli({"ksset", "A3", "show", "--timing"});
  EXPECT_NE(t.out.find("elapsed"), std::string::npos);
}

TEST(Reproduce, TamperedSetFailsAtCount) {
  const auto r = run_cli({"reproduce", "--set",
                          "A3=" KSCHECK_FIXTURE_DIR "/a3_tampered.txt",
                          "--stop-on-failure", "--format", "records"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "check.1=PASS"));
  EXPECT_TRUE(has_line(r.out, "check.4=FAIL"));
  EXPECT_TRUE(has_line(r.out, "check.5=SKIP"));
  EXPECT_TRUE(has_line(r.out, "outcome=Fails"));
}

TEST(Reproduce, BadOverride) {
  EXPECT_EQ(run_cli({"reproduce", "--set", "A3"}).code, 2);
  EXPECT_EQ(run_cli({"reproduce", "--set", "Q=" KSCHECK_FIXTURE_DIR "/a3_tampered.txt"}).code,
            2);
}

TEST(RandomAmplitudes, RangeAndDeterminism) {
  std::mt19937_64 a(9), b(9);
  for (int i = 0; i < 200; ++i) {
    const auto x = random_amplitudes(a, 3);
    EXPECT_EQ(x, random_amplitudes(b, 3));
    EXPECT_NE(x, (std::vector<std::int64_t>{0, 0, 0}));
    for (auto c : x) {
      EXPECT_GE(c, -9);
      EXPECT_LE(c, 9);
    }
  }
}

TEST(Report, Formats) {
  RunReport r;
  r.command = "demo";
  r.add("k", "v");
  r.say("hello");
  r.outcome = Outcome::kFails;
  EXPECT_EQ(format_report(r, Format::kRecords, false),
            "command=demo\nk=v\noutcome=Fails\n");
  EXPECT_EQ(format_report(r, Format::kHuman, false), "hello\noutcome: Fails\n");
  EXPECT_EQ(exit_code(Outcome::kHolds), 0);
  EXPECT_EQ(exit_code(Outcome::kFails), 1);
  EXPECT_EQ(exit_code(Outcome::kError), 2);
}

}  // namespace
}  // namespace kscheck::cli
