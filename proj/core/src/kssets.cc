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

#include <algorithm>
#include <charconv>
#include <initializer_list>
#include <stdexcept>

#include "kscheck/error.h"

namespace kscheck {
namespace {

using Raw = std::initializer_list<std::int64_t>;

std::vector<Direction> rays(std::initializer_list<Raw> raws) {
  std::vector<Direction> out;
  out.reserve(raws.size());
  for (const auto& r : raws) out.push_back(Direction::canonicalize(r));
  return out;
}

void require_same_dim(const VectorSet& a, const VectorSet& b) {
  if (a.dim() != b.dim()) {
    throw Error("vector sets of different dimension (" +
                std::to_string(a.dim()) + " vs " + std::to_string(b.dim()) +
                ")");
  }
}

VectorSet checked(VectorSet s, std::size_t expected) {
  if (s.size() != expected) {
    throw std::logic_error(s.name() + " has " + std::to_string(s.size()) +
                           " members, expected " + std::to_string(expected));
  }
  return s;
}

// Embeds a 4-vector into 6 dimensions at the given offset.
Direction pad(const Direction& v, std::size_t offset) {
  std::vector<std::int64_t> out(6, 0);
  for (std::size_t i = 0; i < v.dim(); ++i) out[offset + i] = v[i];
  return Direction::canonicalize(out);
}

std::string_view strip_comment(std::string_view line) {
  if (auto pos = line.find('#'); pos != std::string_view::npos) {
    line = line.substr(0, pos);
  }
  return line;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r') {
      ++j;
    }
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  const char* begin = tok.data();
  const char* end = tok.data() + tok.size();
  if (!tok.empty() && tok.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw ParseError(line_no, "not an integer: '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

VectorSet VectorSet::make(std::string name, std::size_t dim,
                          std::vector<Direction> members) {
  if (dim == 0) throw Error("vector set dimension must be positive");
  for (const auto& v : members) {
    if (v.dim() != dim) {
      throw Error("member " + v.to_string() + " is not " +
                  std::to_string(dim) + "-dimensional");
    }
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return VectorSet(std::move(name), dim, std::move(members));
}

bool VectorSet::contains(const Direction& v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::optional<std::size_t> VectorSet::index_of(const Direction& v) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - members_.begin());
}

VectorSet VectorSet::renamed(std::string name) const {
  return VectorSet(std::move(name), dim_, members_);
}

VectorSet set_union(const VectorSet& a, const VectorSet& b) {
  require_same_dim(a, b);
  std::vector<Direction> out;
  std::set_union(a.members().begin(), a.members().end(), b.members().begin(),
                 b.members().end(), std::back_inserter(out));
  return VectorSet::make(a.name() + "+" + b.name(), a.dim(), std::move(out));
}

VectorSet set_difference(const VectorSet& a, const VectorSet& b) {
  require_same_dim(a, b);
  std::vector<Direction> out;
  std::set_difference(a.members().begin(), a.members().end(),
                      b.members().begin(), b.members().end(),
                      std::back_inserter(out));
  return VectorSet::make(a.name() + "-" + b.name(), a.dim(), std::move(out));
}

VectorSet set_intersection(const VectorSet& a, const VectorSet& b) {
  require_same_dim(a, b);
  std::vector<Direction> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return VectorSet::make(a.name() + "&" + b.name(), a.dim(), std::move(out));
}

bool contains(const VectorSet& s, const Direction& v) { return s.contains(v); }

std::vector<Direction> expand_pattern(std::int64_t a, std::int64_t b,
                                      std::int64_t c) {
  if (a == 0 && b == 0 && c == 0) throw Error("all-zero pattern");
  std::array<std::int64_t, 3> arr{a, b, c};
  std::sort(arr.begin(), arr.end());
  std::vector<Direction> out;
  do {
    out.push_back(Direction::canonicalize(arr));
  } while (std::next_permutation(arr.begin(), arr.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VectorSet build_A3() {
  static constexpr std::array<std::array<std::int64_t, 3>, 10> kPatterns{{
      {0, 0, 1},
      {0, 1, 1},
      {0, 1, -1},
      {0, 1, 2},
      {0, 1, -2},
      {1, 1, 1},
      {1, 1, -1},
      {1, 1, 2},
      {1, 1, -2},
      {1, -1, 2},
  }};
  std::vector<Direction> all;
  for (const auto& [a, b, c] : kPatterns) {
    auto part = expand_pattern(a, b, c);
    all.insert(all.end(), part.begin(), part.end());
  }
  const auto expanded = VectorSet::make("A3-expanded", 3, std::move(all));
  const auto removed = VectorSet::make(
      "A3-removed", 3,
      rays({{2, 1, 1}, {2, 1, 0}, {2, 1, -1}, {-1, 2, 1}, {1, -2, 0},
            {1, -2, 1}}));
  return checked(set_difference(expanded, removed).renamed("A3"), kA3Size);
}

VectorSet build_S4() {
  return checked(
      VectorSet::make(
          "S4", 4,
          rays({{1, 0, 0, 0},   {0, 0, 1, 0},   {0, 0, 0, 1},
                {1, 1, 0, 0},   {0, 1, 1, 0},   {0, 0, 1, 1},
                {1, -1, 0, 0},  {0, 1, -1, 0},  {1, 0, 1, 0},
                {0, 1, 0, 1},   {0, 1, 0, -1},  {1, 0, 0, 1},
                {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1},
                {1, 1, 1, -1},  {1, 1, -1, 1},  {-1, 1, 1, 1}})),
      kS4Size);
}

S6Construction s6_construction() {
  const auto s4 = build_S4();
  std::vector<Direction> leading, trailing;
  for (const auto& v : s4.members()) {
    leading.push_back(pad(v, 0));
    trailing.push_back(pad(v, 2));
  }
  S6Construction c{
      .leading = VectorSet::make("S4x00", 6, std::move(leading)),
      .trailing = VectorSet::make("00xS4", 6, std::move(trailing)),
      .added = VectorSet::make(
          "S6-added", 6,
          rays({{0, 1, 0, 0, 0, 0}, {1, 0, -1, 0, 0, 0}, {1, 1, 1, 1, 0, 0}})),
      .removed = VectorSet::make("S6-removed", 6,
                                 rays({{0, 0, 1, 0, 0, 0},
                                       {0, 0, 0, 1, 0, 0},
                                       {1, 1, 0, 0, 0, 0},
                                       {0, 0, 1, -1, 0, 0},
                                       {1, -1, -1, 1, 0, 0},
                                       {0, 1, 0, 1, 0, 0}})),
      .result = VectorSet::make("S6", 6, {}),
  };
  c.result = set_difference(set_union(set_union(c.leading, c.trailing), c.added),
                            c.removed)
                 .renamed("S6");
  return c;
}

VectorSet build_S6() { return checked(s6_construction().result, kS6Size); }

std::optional<VectorSet> builtin_set(std::string_view name) {
  if (name == "A3") return build_A3();
  if (name == "S4") return build_S4();
  if (name == "S6") return build_S6();
  return std::nullopt;
}

std::vector<std::array<Direction, 3>> a3_reference_frames() {
  auto d = [](Raw r) { return Direction::canonicalize(r); };
  return {
      {d({1, 0, 0}), d({0, 1, 0}), d({0, 0, 1})},
      {d({1, 0, 0}), d({0, 1, 1}), d({0, 1, -1})},
      {d({1, 0, 1}), d({0, 1, 0}), d({-1, 0, 1})},
      {d({1, 1, 0}), d({1, -1, 0}), d({0, 0, 1})},
      {d({1, 0, 0}), d({0, 1, 2}), d({0, -2, 1})},
      {d({1, 0, 0}), d({0, 1, -2}), d({0, 2, 1})},
      {d({1, 0, 2}), d({0, 1, 0}), d({-2, 0, 1})},
      {d({1, 0, -2}), d({0, 1, 0}), d({2, 0, 1})},
      {d({1, 2, 0}), d({-2, 1, 0}), d({0, 0, 1})},
      {d({1, 1, 1}), d({1, -1, 0}), d({1, 1, -2})},
      {d({1, 1, 1}), d({0, 1, -1}), d({-2, 1, 1})},
      {d({1, 1, -1}), d({0, 1, 1}), d({2, -1, 1})},
      {d({1, -1, 1}), d({1, 1, 0}), d({-1, 1, 2})},
      {d({-1, 1, 1}), d({1, 0, 1}), d({1, 2, -1})},
      {d({-1, 1, 1}), d({1, 1, 0}), d({1, -1, 2})},
      {d({1, 1, -1}), d({1, -1, 0}), d({1, 1, 2})},
      {d({1, -1, 1}), d({-1, 0, 1}), d({1, 2, 1})},
  };
}

ParsedSet parse_set(std::string_view text, std::string name) {
  std::optional<std::size_t> dim;
  std::vector<Direction> members;
  std::size_t line_no = 0;
  for (std::size_t start = 0; start < text.size();) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = split_ws(strip_comment(text.substr(start, end - start)));
    start = end + 1;
    ++line_no;
    if (tokens.empty()) continue;

    if (!dim) {
      if (tokens.size() != 2 || tokens[0] != "dim") {
        throw ParseError(line_no, "expected 'dim <m>' header");
      }
      const auto m = parse_int(tokens[1], line_no);
      if (m < 1) throw ParseError(line_no, "dimension must be positive");
      dim = static_cast<std::size_t>(m);
      continue;
    }
    if (tokens.size() != *dim) {
      throw ParseError(line_no, "expected " + std::to_string(*dim) +
                                    " integers, found " +
                                    std::to_string(tokens.size()));
    }
    std::vector<std::int64_t> raw;
    raw.reserve(tokens.size());
    for (auto tok : tokens) raw.push_back(parse_int(tok, line_no));
    try {
      members.push_back(Direction::canonicalize(raw));
    } catch (const Error& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!dim) throw ParseError(line_no + 1, "missing 'dim <m>' header");
  const std::size_t raw_count = members.size();
  auto set = VectorSet::make(std::move(name), *dim, std::move(members));
  const std::size_t duplicates = raw_count - set.size();
  return ParsedSet{std::move(set), duplicates};
}

std::string serialize_set(const VectorSet& s) {
  std::string out = "# " + s.name() + "\n";
  out += "dim " + std::to_string(s.dim()) + "\n";
  for (const auto& v : s.members()) {
    for (std::size_t i = 0; i < v.dim(); ++i) {
      if (i) out += ' ';
      out += std::to_string(v[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace kscheck
