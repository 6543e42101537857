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

// Orthogonality structure of a vector set: complete frames (contexts) and the
// Kochen-Specker colouring decision.

#ifndef KSCHECK_FRAMES_H_
#define KSCHECK_FRAMES_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <variant>
#include <vector>

#include "kscheck/exactvec.h"
#include "kscheck/kssets.h"

namespace kscheck {

// m pairwise-orthogonal rays in dimension m, stored sorted.
class Frame {
 public:
  // Throws Error unless the members are m distinct, pairwise orthogonal rays
  // of dimension m.
  static Frame make(std::vector<Direction> members);

  std::span<const Direction> members() const { return members_; }
  std::size_t dim() const { return members_.size(); }
  bool contains(const Direction& v) const;
  std::string to_string() const;

  friend bool operator==(const Frame&, const Frame&) = default;
  friend auto operator<=>(const Frame&, const Frame&) = default;

 private:
  explicit Frame(std::vector<Direction> m) : members_(std::move(m)) {}
  std::vector<Direction> members_;
};

class OrthogonalityGraph {
 public:
  explicit OrthogonalityGraph(const VectorSet& s);

  std::size_t size() const { return vertices_.size(); }
  const Direction& vertex(std::size_t i) const { return vertices_[i]; }
  bool adjacent(std::size_t i, std::size_t j) const {
    return adjacency_[i * vertices_.size() + j] != 0;
  }
  std::span<const std::size_t> neighbors(std::size_t i) const {
    return neighbors_[i];
  }
  std::size_t degree(std::size_t i) const { return neighbors_[i].size(); }
  std::size_t edge_count() const;

 private:
  std::vector<Direction> vertices_;
  std::vector<char> adjacency_;
  std::vector<std::vector<std::size_t>> neighbors_;
};

// All m-cliques of the orthogonality graph (m = set dimension), sorted.
// Uses Bron-Kerbosch with pivoting; in dimension m no clique exceeds m, so
// the size-m maximal cliques are exactly the frames.
std::vector<Frame> enumerate_frames(const VectorSet& s);

// Same result by scanning every m-subset of members. Slow; kept as an
// independent cross-check.
std::vector<Frame> enumerate_frames_naive(const VectorSet& s);

struct ContextSlot {
  std::size_t context;   // 0-based position in the frame list
  std::size_t position;  // 0-based position inside that frame

  friend bool operator==(const ContextSlot&, const ContextSlot&) = default;
};

using SharedVectorIndex = std::map<Direction, std::vector<ContextSlot>>;

SharedVectorIndex shared_vector_index(std::span<const Frame> frames);
// For ordered contexts (for example the published A3 triads).
SharedVectorIndex shared_vector_index(
    std::span<const std::array<Direction, 3>> contexts);

// kFramesAndOrthogonality is the Kochen-Specker rule: one 1 per frame and no
// two orthogonal members of the set both 1. kFramesOnly drops the second
// constraint for orthogonal pairs that share no frame; it is the exact-cover
// relaxation that matches the frame-sum inequality.
enum class ColoringRule { kFramesAndOrthogonality, kFramesOnly };

using Coloring = std::map<Direction, bool>;

struct Colorable {
  Coloring assignment;
  // Set when the frame list was empty: the all-zero colouring is returned
  // but proves nothing.
  bool vacuous = false;
  std::uint64_t nodes_explored = 0;
};

struct NotColorable {
  std::uint64_t nodes_explored = 0;
};

using ColorabilityResult = std::variant<Colorable, NotColorable>;

inline bool is_colorable(const ColorabilityResult& r) {
  return std::holds_alternative<Colorable>(r);
}

// Complete backtracking search with unit propagation. Deterministic.
// `frames` would normally be enumerate_frames(s); passing a subset checks a
// weaker property. Throws Error if a frame member is not in s.
ColorabilityResult ks_colorable(
    const VectorSet& s, std::span<const Frame> frames,
    ColoringRule rule = ColoringRule::kFramesAndOrthogonality);

// Direct check of a colouring against the rule.
bool validate_coloring(const VectorSet& s, std::span<const Frame> frames,
                       const Coloring& coloring,
                       ColoringRule rule = ColoringRule::kFramesAndOrthogonality);

}  // namespace kscheck

#endif  // KSCHECK_FRAMES_H_
