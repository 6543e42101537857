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

#include "kscheck/frames.h"

#include <algorithm>
#include <functional>
#include <numeric>

#include "kscheck/error.h"

namespace kscheck {
namespace {

std::vector<std::vector<std::size_t>> frame_indices(
    const VectorSet& s, std::span<const Frame> frames) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(frames.size());
  for (const auto& f : frames) {
    if (f.dim() != s.dim()) throw Error("frame dimension differs from set");
    std::vector<std::size_t> idx;
    for (const auto& v : f.members()) {
      auto i = s.index_of(v);
      if (!i) throw Error("frame member " + v.to_string() + " not in set");
      idx.push_back(*i);
    }
    out.push_back(std::move(idx));
  }
  return out;
}

// Backtracking exact-one search with propagation over variables 0..n-1.
class ColoringSearch {
 public:
  ColoringSearch(std::size_t n, std::vector<std::vector<std::size_t>> frames,
                 std::vector<std::vector<std::size_t>> conflicts)
      : frames_(std::move(frames)),
        conflicts_(std::move(conflicts)),
        frames_of_(n),
        value_(n, kUnknown) {
    for (std::size_t f = 0; f < frames_.size(); ++f) {
      for (std::size_t v : frames_[f]) frames_of_[v].push_back(f);
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return frames_of_[a].size() > frames_of_[b].size();
                     });
  }

  bool solve() { return search(); }
  std::uint64_t nodes() const { return nodes_; }
  std::vector<bool> solution() const {
    std::vector<bool> out(value_.size());
    for (std::size_t i = 0; i < value_.size(); ++i) out[i] = value_[i] == 1;
    return out;
  }

 private:
  static constexpr int kUnknown = -1;

  bool assign(std::size_t v, int x) {
    std::vector<std::pair<std::size_t, int>> queue{{v, x}};
    while (!queue.empty()) {
      auto [u, val] = queue.back();
      queue.pop_back();
      if (value_[u] == val) continue;
      if (value_[u] != kUnknown) return false;
      value_[u] = val;
      trail_.push_back(u);
      if (val == 1) {
        for (std::size_t w : conflicts_[u]) queue.emplace_back(w, 0);
      }
      for (std::size_t f : frames_of_[u]) {
        int ones = 0;
        std::size_t unknowns = 0;
        std::size_t last_unknown = 0;
        for (std::size_t w : frames_[f]) {
          if (value_[w] == 1) ++ones;
          if (value_[w] == kUnknown) {
            ++unknowns;
            last_unknown = w;
          }
        }
        if (ones > 1) return false;
        if (ones == 0 && unknowns == 0) return false;
        if (ones == 0 && unknowns == 1) queue.emplace_back(last_unknown, 1);
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      value_[trail_.back()] = kUnknown;
      trail_.pop_back();
    }
  }

  bool frame_satisfied(std::size_t f) const {
    return std::any_of(frames_[f].begin(), frames_[f].end(),
                       [&](std::size_t w) { return value_[w] == 1; });
  }

  bool search() {
    std::size_t pick = value_.size();
    for (std::size_t v : order_) {
      if (value_[v] != kUnknown) continue;
      const bool open = std::any_of(
          frames_of_[v].begin(), frames_of_[v].end(),
          [&](std::size_t f) { return !frame_satisfied(f); });
      if (open) {
        pick = v;
        break;
      }
    }
    if (pick == value_.size()) {
      for (auto& x : value_) {
        if (x == kUnknown) x = 0;
      }
      return true;
    }
    for (int x : {1, 0}) {
      ++nodes_;
      const std::size_t mark = trail_.size();
      if (assign(pick, x) && search()) return true;
      undo(mark);
    }
    return false;
  }

  std::vector<std::vector<std::size_t>> frames_;
  std::vector<std::vector<std::size_t>> conflicts_;
  std::vector<std::vector<std::size_t>> frames_of_;
  std::vector<std::size_t> order_;
  std::vector<int> value_;
  std::vector<std::size_t> trail_;
  std::uint64_t nodes_ = 0;
};

std::vector<std::vector<std::size_t>> conflict_lists(
    const VectorSet& s, const std::vector<std::vector<std::size_t>>& frames,
    ColoringRule rule) {
  std::vector<std::vector<std::size_t>> out(s.size());
  if (rule == ColoringRule::kFramesAndOrthogonality) {
    OrthogonalityGraph g(s);
    for (std::size_t i = 0; i < s.size(); ++i) {
      out[i].assign(g.neighbors(i).begin(), g.neighbors(i).end());
    }
    return out;
  }
  for (const auto& f : frames) {
    for (std::size_t a : f) {
      for (std::size_t b : f) {
        if (a != b) out[a].push_back(b);
      }
    }
  }
  for (auto& l : out) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return out;
}

}  // namespace

Frame Frame::make(std::vector<Direction> members) {
  const std::size_t m = members.size();
  if (m == 0) throw Error("empty frame");
  for (const auto& v : members) {
    if (v.dim() != m) {
      throw Error("frame of " + std::to_string(m) + " rays needs dimension " +
                  std::to_string(m) + ", got " + v.to_string());
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!orthogonal(members[i], members[j])) {
        throw Error("frame members " + members[i].to_string() + " and " +
                    members[j].to_string() + " are not orthogonal");
      }
    }
  }
  std::sort(members.begin(), members.end());
  return Frame(std::move(members));
}

bool Frame::contains(const Direction& v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

std::string Frame::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out += ", ";
    out += members_[i].to_string();
  }
  return out + "}";
}

OrthogonalityGraph::OrthogonalityGraph(const VectorSet& s)
    : vertices_(s.members().begin(), s.members().end()),
      adjacency_(vertices_.size() * vertices_.size(), 0),
      neighbors_(vertices_.size()) {
  const std::size_t n = vertices_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (orthogonal(vertices_[i], vertices_[j])) {
        adjacency_[i * n + j] = adjacency_[j * n + i] = 1;
        neighbors_[i].push_back(j);
        neighbors_[j].push_back(i);
      }
    }
  }
  for (auto& l : neighbors_) std::sort(l.begin(), l.end());
}

std::size_t OrthogonalityGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& l : neighbors_) total += l.size();
  return total / 2;
}

std::vector<Frame> enumerate_frames(const VectorSet& s) {
  const OrthogonalityGraph g(s);
  const std::size_t m = s.dim();
  std::vector<Frame> out;

  using Set = std::vector<std::size_t>;
  auto intersect_neighbors = [&](const Set& xs, std::size_t v) {
    Set r;
    for (std::size_t x : xs) {
      if (g.adjacent(x, v)) r.push_back(x);
    }
    return r;
  };

  Set clique;
  std::function<void(Set, Set)> expand = [&](Set candidates, Set excluded) {
    if (candidates.empty() && excluded.empty()) {
      if (clique.size() == m) {
        std::vector<Direction> members;
        for (std::size_t i : clique) members.push_back(g.vertex(i));
        out.push_back(Frame::make(std::move(members)));
      }
      return;
    }
    if (clique.size() + candidates.size() < m) return;

    // Pivot on the vertex of candidates + excluded with the most neighbours in
    // candidates.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    for (const Set* pool : {&candidates, &excluded}) {
      for (std::size_t u : *pool) {
        std::size_t c = 0;
        for (std::size_t w : candidates) c += g.adjacent(u, w);
        if (!have_pivot || c > best) {
          pivot = u;
          best = c;
          have_pivot = true;
        }
      }
    }
    Set branch;
    for (std::size_t v : candidates) {
      if (!g.adjacent(pivot, v)) branch.push_back(v);
    }
    for (std::size_t v : branch) {
      clique.push_back(v);
      expand(intersect_neighbors(candidates, v),
             intersect_neighbors(excluded, v));
      clique.pop_back();
      std::erase(candidates, v);
      excluded.push_back(v);
    }
  };

  Set all(g.size());
  std::iota(all.begin(), all.end(), 0);
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Frame> enumerate_frames_naive(const VectorSet& s) {
  const std::size_t n = s.size();
  const std::size_t m = s.dim();
  const auto members = s.members();
  std::vector<Frame> out;
  if (m > n) return out;

  std::vector<std::size_t> pick(m);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    bool ok = true;
    for (std::size_t a = 0; a < m && ok; ++a) {
      for (std::size_t b = a + 1; b < m && ok; ++b) {
        ok = inner(members[pick[a]], members[pick[b]]) == 0;
      }
    }
    if (ok) {
      std::vector<Direction> f;
      for (std::size_t i : pick) f.push_back(members[i]);
      out.push_back(Frame::make(std::move(f)));
    }
    // Next m-combination in lexicographic order.
    std::size_t k = m;
    while (k > 0 && pick[k - 1] == n - m + (k - 1)) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < m; ++j) pick[j] = pick[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

SharedVectorIndex shared_vector_index(std::span<const Frame> frames) {
  SharedVectorIndex out;
  for (std::size_t f = 0; f < frames.size(); ++f) {
    const auto members = frames[f].members();
    for (std::size_t p = 0; p < members.size(); ++p) {
      out[members[p]].push_back({f, p});
    }
  }
  return out;
}

SharedVectorIndex shared_vector_index(
    std::span<const std::array<Direction, 3>> contexts) {
  SharedVectorIndex out;
  for (std::size_t f = 0; f < contexts.size(); ++f) {
    for (std::size_t p = 0; p < 3; ++p) out[contexts[f][p]].push_back({f, p});
  }
  return out;
}

ColorabilityResult ks_colorable(const VectorSet& s,
                                std::span<const Frame> frames,
                                ColoringRule rule) {
  if (frames.empty()) {
    Colorable trivial;
    for (const auto& v : s.members()) trivial.assignment[v] = false;
    trivial.vacuous = true;
    return trivial;
  }
  auto idx = frame_indices(s, frames);
  auto conflicts = conflict_lists(s, idx, rule);
  ColoringSearch search(s.size(), std::move(idx), std::move(conflicts));
  if (!search.solve()) return NotColorable{search.nodes()};

  Colorable out;
  out.nodes_explored = search.nodes();
  const auto bits = search.solution();
  for (std::size_t i = 0; i < s.size(); ++i) {
    out.assignment[s.members()[i]] = bits[i];
  }
  return out;
}

bool validate_coloring(const VectorSet& s, std::span<const Frame> frames,
                       const Coloring& coloring, ColoringRule rule) {
  for (const auto& v : s.members()) {
    if (!coloring.contains(v)) return false;
  }
  for (const auto& f : frames) {
    int ones = 0;
    for (const auto& v : f.members()) {
      auto it = coloring.find(v);
      if (it == coloring.end()) return false;
      ones += it->second ? 1 : 0;
    }
    if (ones != 1) return false;
  }
  if (rule == ColoringRule::kFramesAndOrthogonality) {
    const auto members = s.members();
    for (std::size_t i = 0; i < members.size(); ++i) {
      if (!coloring.at(members[i])) continue;
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (coloring.at(members[j]) && orthogonal(members[i], members[j])) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace kscheck
