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

#include "kscheck/kssets.h"

#include <set>

#include "gtest/gtest.h"
#include "kscheck/error.h"

namespace kscheck {
namespace {

Direction dir(std::initializer_list<std::int64_t> v) {
  return Direction::canonicalize(v);
}

TEST(ExpandPattern, Examples) {
  EXPECT_EQ(expand_pattern(0, 0, 1),
            (std::vector<Direction>{dir({0, 0, 1}), dir({0, 1, 0}),
                                    dir({1, 0, 0})}));
  EXPECT_EQ(expand_pattern(1, 1, 1), (std::vector<Direction>{dir({1, 1, 1})}));
  EXPECT_EQ(expand_pattern(1, -1, 2).size(), 6u);
  EXPECT_THROW(expand_pattern(0, 0, 0), Error);
}

TEST(ExpandPattern, SizesOfTheA3Patterns) {
  const std::vector<std::array<std::int64_t, 3>> patterns{
      {0, 0, 1},  {0, 1, 1},  {0, 1, -1}, {0, 1, 2}, {0, 1, -2},
      {1, 1, 1},  {1, 1, -1}, {1, 1, 2},  {1, 1, -2}, {1, -1, 2}};
  const std::vector<std::size_t> want{3, 3, 3, 6, 6, 1, 3, 3, 3, 6};
  std::set<Direction> all;
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    const auto [a, b, c] = patterns[i];
    const auto part = expand_pattern(a, b, c);
    EXPECT_EQ(part.size(), want[i]) << i;
    all.insert(part.begin(), part.end());
  }
  EXPECT_EQ(all.size(), 37u);
  const std::vector<Direction> removed{dir({2, 1, 1}),  dir({2, 1, 0}),
                                       dir({2, 1, -1}), dir({-1, 2, 1}),
                                       dir({1, -2, 0}), dir({1, -2, 1})};
  for (const auto& v : removed) {
    EXPECT_TRUE(all.contains(v)) << v.to_string();
    all.erase(v);
  }
  const auto a3 = build_A3();
  EXPECT_EQ(std::vector<Direction>(all.begin(), all.end()),
            std::vector<Direction>(a3.members().begin(), a3.members().end()));
}

TEST(BuiltInSets, A3) {
  const auto a3 = build_A3();
  EXPECT_EQ(a3.size(), 31u);
  EXPECT_EQ(a3.dim(), 3u);
  EXPECT_TRUE(a3.contains(dir({0, -2, 1})));
  EXPECT_FALSE(a3.contains(dir({2, 1, 0})));
  EXPECT_TRUE(contains(a3, dir({0, 0, 2})));
}

TEST(BuiltInSets, S4) {
  const auto s4 = build_S4();
  EXPECT_EQ(s4.size(), 18u);
  EXPECT_TRUE(s4.contains(dir({1, -1, 1, -1})));
  EXPECT_FALSE(s4.contains(dir({1, 1, 1, 1})));
}

TEST(BuiltInSets, S6) {
  const auto s6 = build_S6();
  EXPECT_EQ(s6.size(), 31u);
  EXPECT_TRUE(s6.contains(dir({1, 1, 1, 1, 0, 0})));
}

TEST(BuiltInSets, S6Bookkeeping) {
  const auto c = s6_construction();
  EXPECT_EQ(c.leading.size(), 18u);
  EXPECT_EQ(c.trailing.size(), 18u);
  // Independent overlap: pad every S4 member both ways and compare tuples.
  std::set<std::vector<std::int64_t>> lead, trail;
  const auto s4 = build_S4();
  for (const auto& v : s4.members()) {
    std::vector<std::int64_t> a(v.components().begin(), v.components().end());
    auto b = a;
    a.insert(a.end(), {0, 0});
    b.insert(b.begin(), {0, 0});
    lead.insert(a);
    trail.insert(b);
  }
  std::vector<std::vector<std::int64_t>> overlap;
  for (const auto& v : lead) {
    if (trail.contains(v)) overlap.push_back(v);
  }
  EXPECT_EQ(overlap, (std::vector<std::vector<std::int64_t>>{
                         {0, 0, 1, 0, 0, 0}, {0, 0, 1, 1, 0, 0}}));
  EXPECT_EQ(set_intersection(c.leading, c.trailing).size(), overlap.size());

  const auto base = set_union(c.leading, c.trailing);
  EXPECT_EQ(base.size(), 34u);
  for (const auto& v : c.added.members()) EXPECT_FALSE(base.contains(v));
  for (const auto& v : c.removed.members()) EXPECT_TRUE(base.contains(v));
  EXPECT_EQ(36 - 2 + 3 - 6, 31);
  EXPECT_EQ(c.result, build_S6());
}

TEST(BuiltInSets, ByName) {
  EXPECT_EQ(*builtin_set("A3"), build_A3());
  EXPECT_EQ(*builtin_set("S4"), build_S4());
  EXPECT_EQ(*builtin_set("S6"), build_S6());
  EXPECT_FALSE(builtin_set("a3"));
  EXPECT_FALSE(builtin_set("S5"));
}

TEST(ReferenceFrames, AreOrthogonalTriadsOfA3) {
  const auto a3 = build_A3();
  const auto frames = a3_reference_frames();
  ASSERT_EQ(frames.size(), 17u);
  for (const auto& f : frames) {
    for (const auto& v : f) EXPECT_TRUE(a3.contains(v)) << v.to_string();
    EXPECT_EQ(inner(f[0], f[1]), 0);
    EXPECT_EQ(inner(f[1], f[2]), 0);
    EXPECT_EQ(inner(f[0], f[2]), 0);
  }
}

TEST(SetAlgebra, Identities) {
  const auto a = build_A3();
  const auto b = VectorSet::make("b", 3, {dir({1, 0, 0}), dir({5, 5, 7})});
  EXPECT_EQ(set_union(a, a), a);
  const auto d = set_difference(set_union(a, b), b);
  for (const auto& v : d.members()) EXPECT_TRUE(a.contains(v));
  EXPECT_FALSE(d.contains(dir({1, 0, 0})));
  EXPECT_EQ(set_intersection(a, b).size(), 1u);
  EXPECT_THROW(set_union(a, build_S4()), Error);
  EXPECT_THROW(set_difference(a, build_S4()), Error);
  EXPECT_THROW(set_intersection(a, build_S4()), Error);
}

TEST(VectorSet, MakeValidates) {
  EXPECT_THROW(VectorSet::make("x", 3, {dir({1, 0})}), Error);
  EXPECT_THROW(VectorSet::make("x", 0, {}), Error);
  const auto s = VectorSet::make("x", 2, {dir({0, 1}), dir({1, 0}), dir({0, 3})});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.index_of(dir({1, 0})), 1u);
  EXPECT_FALSE(s.index_of(dir({1, 1})));
  EXPECT_EQ(s.renamed("y").name(), "y");
  EXPECT_EQ(s.renamed("y"), s);
}

TEST(Parse, RoundTrip) {
  for (const auto& s : {build_A3(), build_S4(), build_S6()}) {
    const auto text = serialize_set(s);
    const auto parsed = parse_set(text);
    EXPECT_EQ(parsed.set, s);
    EXPECT_EQ(parsed.duplicates_collapsed, 0u);
    EXPECT_EQ(serialize_set(parsed.set.renamed(s.name())), text);
  }
}

TEST(Parse, Format) {
  const auto p = parse_set("# comment\n\ndim 3\n2 0 0  # scaled\n1 0 0\n-1 2 1");
  EXPECT_EQ(p.set.size(), 2u);
  EXPECT_EQ(p.duplicates_collapsed, 1u);
  EXPECT_TRUE(p.set.contains(dir({1, -2, -1})));
  EXPECT_EQ(parse_set("dim 2\n1 1\n1 -1\n").set.dim(), 2u);
  EXPECT_EQ(serialize_set(VectorSet::make("t", 2, {dir({1, -1}), dir({1, 1})})),
            "# t\ndim 2\n1 -1\n1 1\n");
}

int error_line(std::string_view text) {
  try {
    parse_set(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("dim 3\n1 0 0\n1 x 0\n"), 3);
  EXPECT_EQ(error_line("dim 3\n1 0 0\n0 1\n"), 3);
  EXPECT_EQ(error_line("dim 3\n\n0 0 0\n"), 3);
  EXPECT_EQ(error_line("dim 3\n1 0\n"), 2);
  EXPECT_EQ(error_line("dim x\n"), 1);
  EXPECT_EQ(error_line("1 0 0\ndim 3\n"), 1);
  EXPECT_EQ(error_line("dim 3\n1 0 0 7\n"), 2);
  EXPECT_EQ(error_line("dim 0\n"), 1);
  EXPECT_GE(error_line("# nothing\n"), 1);
  try {
    parse_set("dim 3\n1 x 0\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("line 2: ", 0), 0u) << e.what();
  }
}

}  // namespace
}  // namespace kscheck
