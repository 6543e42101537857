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

#include "kscheck/inequality.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <optional>

#include "kscheck/error.h"

namespace kscheck {
namespace {

void require_sign(int x) {
  if (x != 1 && x != -1) {
    throw Error("observable value must be +1 or -1, got " + std::to_string(x));
  }
}

void require_triads(std::span<const Frame> frames) {
  for (const auto& f : frames) {
    if (f.dim() != 3) {
      throw Error("frame-sum inequality needs triads, got a frame of size " +
                  std::to_string(f.dim()));
    }
  }
}

// Frame value indexed by the number of -1 entries.
constexpr std::array<int, 4> kValueByMinusCount{-5, 1, -1, -3};

// Best achievable frame value given `minus` known -1 values and `open`
// undecided members.
int optimistic_frame_value(int minus, int open) {
  int best = std::numeric_limits<int>::min();
  for (int extra = 0; extra <= open; ++extra) {
    best = std::max(best, kValueByMinusCount[minus + extra]);
  }
  return best;
}

// Branch and bound over +/-1 values for rays 0..n-1 of a triad collection.
class BoundSearch {
 public:
  BoundSearch(std::size_t n, std::vector<std::array<std::size_t, 3>> triads)
      : triads_(std::move(triads)),
        triads_of_(n),
        value_(n, 0),
        fixed_(n, 0) {
    for (std::size_t t = 0; t < triads_.size(); ++t) {
      for (std::size_t v : triads_[t]) triads_of_[v].push_back(t);
    }
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) {
                       return triads_of_[a].size() > triads_of_[b].size();
                     });
  }

  // Pins ray v to x for later searches; 0 releases it.
  void fix(std::size_t v, int x) { fixed_[v] = x; }

  // Maximum over completions of the fixed values.
  int maximize() {
    best_ = std::numeric_limits<int>::min();
    target_.reset();
    reset_state();
    descend(0);
    return best_;
  }

  // Whether some completion of the fixed values reaches `target`.
  bool reachable(int target) {
    best_ = std::numeric_limits<int>::min();
    target_ = target;
    reset_state();
    descend(0);
    return best_ >= target;
  }

  int fixed(std::size_t v) const { return fixed_[v]; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  void reset_state() {
    std::fill(value_.begin(), value_.end(), 0);
    minus_.assign(triads_.size(), 0);
    open_.assign(triads_.size(), 3);
    optimistic_ = 0;
    for (std::size_t t = 0; t < triads_.size(); ++t) {
      optimistic_ += optimistic_frame_value(0, 3);
    }
  }

  void set(std::size_t v, int x) {
    value_[v] = x;
    for (std::size_t t : triads_of_[v]) {
      optimistic_ -= optimistic_frame_value(minus_[t], open_[t]);
      --open_[t];
      if (x < 0) ++minus_[t];
      optimistic_ += optimistic_frame_value(minus_[t], open_[t]);
    }
  }

  void unset(std::size_t v) {
    const int x = value_[v];
    for (std::size_t t : triads_of_[v]) {
      optimistic_ -= optimistic_frame_value(minus_[t], open_[t]);
      ++open_[t];
      if (x < 0) --minus_[t];
      optimistic_ += optimistic_frame_value(minus_[t], open_[t]);
    }
    value_[v] = 0;
  }

  bool done() const { return target_ && best_ >= *target_; }

  void descend(std::size_t depth) {
    if (done()) return;
    // With every triad decided `optimistic_` is the exact value.
    const int floor = target_ ? *target_ - 1 : best_;
    if (optimistic_ <= floor) return;
    if (depth == order_.size()) {
      best_ = optimistic_;
      return;
    }
    const std::size_t v = order_[depth];
    const int forced = fixed_[v];
    for (int x : {-1, 1}) {
      if (forced != 0 && x != forced) continue;
      ++nodes_;
      set(v, x);
      descend(depth + 1);
      unset(v);
      if (done()) return;
    }
  }

  std::vector<std::array<std::size_t, 3>> triads_;
  std::vector<std::vector<std::size_t>> triads_of_;
  std::vector<std::size_t> order_;
  std::vector<int> value_;
  std::vector<int> fixed_;
  std::vector<int> minus_;
  std::vector<int> open_;
  int optimistic_ = 0;
  int best_ = 0;
  std::optional<int> target_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

Assignment::Assignment(std::map<Direction, int> values)
    : values_(std::move(values)) {
  for (const auto& [v, x] : values_) require_sign(x);
}

int Assignment::value(const Direction& v) const {
  auto it = values_.find(v);
  if (it == values_.end()) throw Error("missing value for " + v.to_string());
  return it->second;
}

void Assignment::set(const Direction& v, int value) {
  require_sign(value);
  values_[v] = value;
}

int classical_frame_value(int a1, int a2, int a3) {
  require_sign(a1);
  require_sign(a2);
  require_sign(a3);
  return -(1 + a1 * a2 + a2 * a3 + a3 * a1 + a1 * a2 * a3);
}

int classical_beta(const Assignment& assignment,
                   std::span<const Frame> frames) {
  require_triads(frames);
  int total = 0;
  for (const auto& f : frames) {
    const auto m = f.members();
    total += classical_frame_value(assignment.value(m[0]),
                                   assignment.value(m[1]),
                                   assignment.value(m[2]));
  }
  return total;
}

NoncontextualBound noncontextual_bound(std::span<const Frame> frames) {
  if (frames.empty()) throw Error("noncontextual_bound: no frames");
  require_triads(frames);

  std::vector<Direction> rays;
  for (const auto& f : frames) {
    rays.insert(rays.end(), f.members().begin(), f.members().end());
  }
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  auto index = [&](const Direction& v) {
    return static_cast<std::size_t>(
        std::lower_bound(rays.begin(), rays.end(), v) - rays.begin());
  };
  std::vector<std::array<std::size_t, 3>> triads;
  for (const auto& f : frames) {
    const auto m = f.members();
    triads.push_back({index(m[0]), index(m[1]), index(m[2])});
  }

  BoundSearch search(rays.size(), std::move(triads));
  NoncontextualBound out;
  out.value = search.maximize();

  // Pin rays in canonical order, preferring -1, while the optimum stays
  // reachable. The result is the lexicographically least maximizer.
  std::map<Direction, int> witness;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    search.fix(i, -1);
    if (!search.reachable(out.value)) search.fix(i, 1);
    witness[rays[i]] = search.fixed(i);
  }
  out.nodes_explored = search.nodes();
  out.witness = Assignment(std::move(witness));
  return out;
}

int algebraic_bound(std::span<const Frame> frames) {
  return static_cast<int>(frames.size());
}

RationalMatrix frame_operator(std::span<const Direction> triad) {
  if (triad.size() != 3) throw Error("frame operator needs exactly three rays");
  for (const auto& v : triad) {
    if (v.dim() != 3) throw Error("frame operator needs rays in dimension 3");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) {
      if (!orthogonal(triad[i], triad[j])) {
        throw Error("frame operator: " + triad[i].to_string() + " and " +
                    triad[j].to_string() + " are not orthogonal");
      }
    }
  }
  const auto a1 = observable(triad[0]);
  const auto a2 = observable(triad[1]);
  const auto a3 = observable(triad[2]);
  const auto a12 = a1 * a2;
  auto sum = RationalMatrix::identity(3);
  sum += a12;
  sum += a2 * a3;
  sum += a3 * a1;
  sum += a12 * a3;
  return -sum;
}

RationalMatrix frame_operator(const Frame& f) {
  return frame_operator(f.members());
}

QuantumState QuantumState::make(RationalVector amplitudes) {
  if (amplitudes.dim() == 0 || amplitudes.is_zero()) {
    throw Error("zero state");
  }
  return QuantumState(std::move(amplitudes));
}

QuantumState QuantumState::from_integers(
    std::span<const std::int64_t> amplitudes) {
  return make(RationalVector::from_integers(amplitudes));
}

Rational quantum_value(std::span<const Frame> frames, const QuantumState& psi) {
  const auto& x = psi.amplitudes();
  Rational total = 0;
  for (const auto& f : frames) {
    if (f.dim() != x.dim()) {
      throw Error("state dimension " + std::to_string(x.dim()) +
                  " does not match frame dimension " + std::to_string(f.dim()));
    }
    total += quadratic_form(frame_operator(f), x);
  }
  return total / inner(x, x);
}

Rational quantum_value_mixture(std::span<const Frame> frames,
                               std::span<const WeightedState> mixture) {
  Rational weight_sum = 0;
  Rational total = 0;
  for (const auto& [w, state] : mixture) {
    if (sgn(w) < 0) throw Error("mixture weights must be nonnegative");
    weight_sum += w;
    total += w * quantum_value(frames, state);
  }
  if (weight_sum != 1) throw Error("mixture weights must sum to 1");
  return total;
}

BetaInequality build_inequality(const VectorSet& s) {
  if (s.dim() != 3) {
    throw Error("inequality construction specified only for triads");
  }
  BetaInequality out;
  out.frames = enumerate_frames(s);
  if (out.frames.empty()) throw Error("set contains no orthogonal triad");

  auto bound = noncontextual_bound(out.frames);
  out.noncontextual_bound = bound.value;
  out.witness = std::move(bound.witness);
  out.algebraic_bound = algebraic_bound(out.frames);

  out.operator_sum = RationalMatrix::zero(3);
  for (const auto& f : out.frames) out.operator_sum += frame_operator(f);
  out.state_independent = out.operator_sum.is_scalar();
  out.quantum_value = out.operator_sum.trace() / 3;
  return out;
}

}  // namespace kscheck
