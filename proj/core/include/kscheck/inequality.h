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

// Frame-sum noncontextuality inequality over orthogonal triads.
//
// Each ray v carries a +/-1 observable A_v (quantum: I - 2|v><v|). For a triad
// {a, b, c} the frame term is
//
//   B = -(1 + A_a A_b + A_b A_c + A_c A_a + A_a A_b A_c),
//
// which is +1 exactly when one of the three values is -1 and the other two are
// +1. Summing B over the triads gives beta. Classically every ray holds one
// value shared by all triads containing it; quantum mechanically each B is
// the identity on a complete triad, so beta equals the number of triads for
// every state.

#ifndef KSCHECK_INEQUALITY_H_
#define KSCHECK_INEQUALITY_H_

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "kscheck/exactvec.h"
#include "kscheck/frames.h"
#include "kscheck/kssets.h"

namespace kscheck {

// One +/-1 value per ray.
class Assignment {
 public:
  Assignment() = default;
  // Throws Error if any value is not +1 or -1.
  explicit Assignment(std::map<Direction, int> values);

  // Throws Error("missing value for ...") when v is unassigned.
  int value(const Direction& v) const;
  const std::map<Direction, int>& values() const { return values_; }
  void set(const Direction& v, int value);

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<Direction, int> values_;
};

// Throws Error unless every argument is +1 or -1.
int classical_frame_value(int a1, int a2, int a3);

// Sum of classical_frame_value over triads, each ray read from the shared
// assignment. Throws Error on missing values or non-triad frames.
int classical_beta(const Assignment& assignment, std::span<const Frame> frames);

struct NoncontextualBound {
  int value = 0;
  // Lexicographically least maximizer over the rays in canonical order,
  // with -1 ordered before +1.
  Assignment witness;
  std::uint64_t nodes_explored = 0;
};

// Exact maximum of classical_beta over all +/-1 assignments to the rays that
// occur in `frames`. Complete branch and bound: rays are branched in
// descending frame-membership order and each undecided triad is bounded by
// its best completion. Throws Error for an empty list or non-triad frames.
NoncontextualBound noncontextual_bound(std::span<const Frame> frames);

// Number of frames (each term is at most +1).
int algebraic_bound(std::span<const Frame> frames);

// -(I + A1 A2 + A2 A3 + A3 A1 + A1 A2 A3) with A_i = observable(v_i).
// Throws Error unless given three pairwise orthogonal rays in dimension 3.
RationalMatrix frame_operator(std::span<const Direction> triad);
RationalMatrix frame_operator(const Frame& f);

class QuantumState {
 public:
  // Throws Error for the zero vector.
  static QuantumState make(RationalVector amplitudes);
  static QuantumState from_integers(std::span<const std::int64_t> amplitudes);

  const RationalVector& amplitudes() const { return amplitudes_; }
  std::size_t dim() const { return amplitudes_.dim(); }

 private:
  explicit QuantumState(RationalVector a) : amplitudes_(std::move(a)) {}
  RationalVector amplitudes_;
};

// sum_j <psi|B^j|psi> / <psi|psi>, exactly. Throws Error on dimension
// mismatch.
Rational quantum_value(std::span<const Frame> frames, const QuantumState& psi);

struct WeightedState {
  Rational weight;
  QuantumState state;
};

// Convex combination of pure-state values. Weights must be nonnegative and
// sum to 1.
Rational quantum_value_mixture(std::span<const Frame> frames,
                               std::span<const WeightedState> mixture);

struct BetaInequality {
  std::vector<Frame> frames;
  int noncontextual_bound = 0;
  int algebraic_bound = 0;
  // sum_j B^j; equal to quantum_value * I when the value is state independent.
  RationalMatrix operator_sum{1};
  Rational quantum_value;
  bool state_independent = false;
  Assignment witness;

  Rational gap() const { return quantum_value - noncontextual_bound; }
  bool violated() const { return quantum_value > noncontextual_bound; }
};

// Assembles the inequality over every orthogonal triad of a three-dimensional
// set. Throws Error("inequality construction specified only for triads") for
// other dimensions and Error if the set has no triad.
BetaInequality build_inequality(const VectorSet& s);

}  // namespace kscheck

#endif  // KSCHECK_INEQUALITY_H_
