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

// Kochen-Specker vector sets as ray sets, and their text format.
//
// Text format (UTF-8):
//
//   # comment
//   dim 3
//   1 0 0
//   0 1 -1
//
// `#` starts a comment anywhere on a line. The first non-comment line must be
// `dim <m>`; every later non-comment line holds m whitespace-separated
// integers. Serialization writes members in canonical sorted order with no
// trailing whitespace.

#ifndef KSCHECK_KSSETS_H_
#define KSCHECK_KSSETS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kscheck/exactvec.h"

namespace kscheck {

// Canonical rays of one ambient dimension, deduplicated and sorted.
class VectorSet {
 public:
  // Canonicalizes nothing (Directions already are canonical) but sorts and
  // removes duplicates. Throws Error if members disagree on dimension or if
  // dim is zero.
  static VectorSet make(std::string name, std::size_t dim,
                        std::vector<Direction> members);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::span<const Direction> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Direction& v) const;
  // Position of v in members(), if present.
  std::optional<std::size_t> index_of(const Direction& v) const;

  VectorSet renamed(std::string name) const;

  friend bool operator==(const VectorSet& a, const VectorSet& b) {
    return a.dim_ == b.dim_ && a.members_ == b.members_;
  }

 private:
  VectorSet(std::string name, std::size_t dim, std::vector<Direction> members)
      : name_(std::move(name)), dim_(dim), members_(std::move(members)) {}

  std::string name_;
  std::size_t dim_;
  std::vector<Direction> members_;
};

// Ray-level set algebra. Throws Error on dimension mismatch.
VectorSet set_union(const VectorSet& a, const VectorSet& b);
VectorSet set_difference(const VectorSet& a, const VectorSet& b);
VectorSet set_intersection(const VectorSet& a, const VectorSet& b);
bool contains(const VectorSet& s, const Direction& v);

// All distinct rays obtained by arranging the multiset {a, b, c} as a
// 3-vector, sorted. Throws Error for the all-zero pattern.
std::vector<Direction> expand_pattern(std::int64_t a, std::int64_t b,
                                      std::int64_t c);

// The 31-ray antisymmetric two-qutrit set (coordinates in the Slater basis).
VectorSet build_A3();
// The 18-ray four-dimensional set.
VectorSet build_S4();
// The 31-ray symmetric two-qutrit set (coordinates in the occupation basis).
VectorSet build_S6();

// Stages of the S6 construction: S4 embedded in the leading and trailing four
// coordinates, then rays added and removed.
struct S6Construction {
  VectorSet leading;
  VectorSet trailing;
  VectorSet added;
  VectorSet removed;
  VectorSet result;
};
S6Construction s6_construction();

// Printed member counts; build_* throws std::logic_error when the generated
// set disagrees.
inline constexpr std::size_t kA3Size = 31;
inline constexpr std::size_t kS4Size = 18;
inline constexpr std::size_t kS6Size = 31;

// "A3", "S4", "S6" (case-sensitive); nullopt for anything else.
std::optional<VectorSet> builtin_set(std::string_view name);

// The 17 orthogonal triads inside A3, in their published order with the
// published member order (canonicalized rays). Used to map enumerated frames
// back to their conventional labels 1..17.
std::vector<std::array<Direction, 3>> a3_reference_frames();

struct ParsedSet {
  VectorSet set;
  std::size_t duplicates_collapsed = 0;
};

// Throws ParseError (with a 1-based line number) on malformed input,
// inconsistent row width, or a zero vector.
ParsedSet parse_set(std::string_view text, std::string name = "file");
std::string serialize_set(const VectorSet& s);

}  // namespace kscheck

#endif  // KSCHECK_KSSETS_H_
