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

// Permutation action on n-qudit product spaces and the fully symmetric /
// antisymmetric subspaces it singles out.
//
// Product basis kets are labelled by level tuples (i_1, ..., i_n) with each
// level in [0, d). For qutrits the levels render as + 0 - (0 -> '+',
// 1 -> '0', 2 -> '-'); other d render as digits.
//
// Vectors are kept unnormalized with integer (or rational) coefficients. The
// normalization 1/sqrt(normsq) is carried alongside and never multiplied in,
// so everything stays exact.

#ifndef KSCHECK_SYMMETRIZER_H_
#define KSCHECK_SYMMETRIZER_H_

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "kscheck/error.h"
#include "kscheck/exactvec.h"

namespace kscheck {

enum class Statistics { kBosonic, kFermionic };

std::string to_string(Statistics s);

struct Scenario {
  int n;  // particles
  int d;  // levels per particle
  Statistics statistics;

  // Throws Error unless n >= 2 and d >= 2.
  static Scenario make(int n, int d, Statistics statistics);
};

struct ScenarioClass {
  enum class Kind { kNoPhysicalStates, kDimensionOne, kSicPossible };
  Kind kind;
  BigInt dim;  // dimension of the physical subspace (0, 1 or >= 3)

  friend bool operator==(const ScenarioClass&, const ScenarioClass&) = default;
};

std::string to_string(ScenarioClass::Kind k);

// binomial(d + n - 1, n). Throws Error for n < 1 or d < 1.
BigInt dim_symmetric(int n, int d);
// binomial(d, n), zero when n > d. Throws Error for n < 1 or d < 1.
BigInt dim_antisymmetric(int n, int d);

ScenarioClass classify(const Scenario& s);

// True iff no scenario with 2 <= n <= n_max, 2 <= d <= d_max has a symmetric
// or antisymmetric subspace of dimension exactly 2.
bool scan_no_dim_two(int n_max, int d_max);

struct ProductBasisIndex {
  std::vector<int> levels;

  friend bool operator==(const ProductBasisIndex&,
                         const ProductBasisIndex&) = default;
  friend auto operator<=>(const ProductBasisIndex&,
                          const ProductBasisIndex&) = default;
};

template <typename Coeff>
using CoefficientMap = std::map<ProductBasisIndex, Coeff>;

class SubspaceBasisVector {
 public:
  // Zero coefficients are dropped. Throws Error if nothing nonzero remains
  // or if the indices disagree on particle count.
  static SubspaceBasisVector make(CoefficientMap<std::int64_t> coefficients);

  const CoefficientMap<std::int64_t>& coefficients() const {
    return coefficients_;
  }
  std::int64_t normsq() const { return normsq_; }
  int arity() const {
    return static_cast<int>(coefficients_.begin()->first.levels.size());
  }
  std::int64_t coefficient(const ProductBasisIndex& idx) const;

  SubspaceBasisVector negated() const;

  friend bool operator==(const SubspaceBasisVector&,
                         const SubspaceBasisVector&) = default;

 private:
  SubspaceBasisVector(CoefficientMap<std::int64_t> c, std::int64_t normsq)
      : coefficients_(std::move(c)), normsq_(normsq) {}

  CoefficientMap<std::int64_t> coefficients_;
  std::int64_t normsq_;
};

struct SubspaceBasis {
  Scenario scenario;
  std::vector<SubspaceBasisVector> vectors;
};

// A permutation of n slots as the image list: the particle in slot k moves to
// slot perm[k]. Must be a bijection on {0, ..., n-1}.
using Permutation = std::vector<int>;

// Throws Error if perm is not a permutation.
int permutation_sign(const Permutation& perm);
Permutation transposition(int n, int i, int j);

// Relocates coefficients: the coefficient of (i_1, ..., i_n) lands on the
// index whose slot perm[k] holds i_k. Throws Error on arity mismatch.
template <typename Coeff>
CoefficientMap<Coeff> permute(const Permutation& perm,
                              const CoefficientMap<Coeff>& v);
SubspaceBasisVector permute(const Permutation& perm,
                            const SubspaceBasisVector& v);

// Checks every transposition: bosonic vectors must be fixed, fermionic ones
// negated, coefficient by coefficient.
template <typename Coeff>
bool verify_symmetry(const CoefficientMap<Coeff>& v, Statistics statistics);
bool verify_symmetry(const SubspaceBasisVector& v, Statistics statistics);

template <typename Coeff>
Coeff unnormalized_inner(const CoefficientMap<Coeff>& a,
                         const CoefficientMap<Coeff>& b);

struct BasisCheck {
  bool pairwise_orthogonal = false;
  bool symmetry = false;
  bool count_matches_dimension = false;

  bool ok() const { return pairwise_orthogonal && symmetry && count_matches_dimension; }
};

BasisCheck check_basis(const SubspaceBasis& basis);

// Occupation-number basis (bosons) or Slater basis (fermions), in
// lexicographic order of the level multiset / subset. Throws
// Error("empty subspace") when the scenario has no physical states.
SubspaceBasis generate_basis(const Scenario& s);

enum class PaperBasis { kBosonTwoQutrits, kFermionTwoQutrits };

// The two-qutrit bases written out by hand in the construction of the
// six-dimensional symmetric and three-dimensional antisymmetric KS sets.
SubspaceBasis paper_basis(PaperBasis which);

// Same vectors up to a per-vector global sign and reordering.
bool equal_up_to_sign_and_order(const SubspaceBasis& a, const SubspaceBasis& b);

// A subspace-coordinate vector rewritten over the product basis.
//
// Each term reads as coefficient / sqrt(normsq) times basis vector
// `basis_index`; zero coordinates produce no term.
// `by_radical` groups the same sum by square-free radical: the entry for s
// holds the rational coefficient map multiplying 1/sqrt(s). Distinct
// square-free radicals are linearly independent over Q, so the grouped form
// is unique and can be compared exactly group by group.
struct LiftedVector {
  struct Term {
    std::size_t basis_index;
    Rational coefficient;
    std::int64_t normsq;
  };
  int n = 0;
  int d = 0;
  std::vector<Term> terms;
  std::map<std::int64_t, CoefficientMap<Rational>> by_radical;
};

// Throws Error on length mismatch.
LiftedVector lift(std::span<const std::int64_t> coords,
                  const SubspaceBasis& basis);
LiftedVector lift(const Direction& v, const SubspaceBasis& basis);

bool verify_symmetry(const LiftedVector& v, Statistics statistics);

// "|+0>" for qutrits, "|01>" otherwise.
std::string render_ket(const ProductBasisIndex& idx, int d);
// "(1/sqrt(6))(|+-> + 2|00> + |-+>)"
std::string render(const SubspaceBasisVector& v, int d);
// "|++> - (1/sqrt(6))(|+-> + 2|00> + |-+>)"
std::string render(const LiftedVector& v, const SubspaceBasis& basis);

// ---------------------------------------------------------------------------
// Template definitions.

namespace internal {
void check_permutation(const Permutation& perm);
}  // namespace internal

template <typename Coeff>
CoefficientMap<Coeff> permute(const Permutation& perm,
                              const CoefficientMap<Coeff>& v) {
  internal::check_permutation(perm);
  CoefficientMap<Coeff> out;
  for (const auto& [idx, c] : v) {
    if (idx.levels.size() != perm.size()) {
      throw Error("permute: arity mismatch");
    }
    ProductBasisIndex moved{std::vector<int>(idx.levels.size())};
    for (std::size_t k = 0; k < perm.size(); ++k) {
      moved.levels[perm[k]] = idx.levels[k];
    }
    out.emplace(std::move(moved), c);
  }
  return out;
}

template <typename Coeff>
bool verify_symmetry(const CoefficientMap<Coeff>& v, Statistics statistics) {
  if (v.empty()) return true;
  const int n = static_cast<int>(v.begin()->first.levels.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const auto swapped = permute(transposition(n, i, j), v);
      if (statistics == Statistics::kBosonic) {
        if (swapped != v) return false;
      } else {
        if (swapped.size() != v.size()) return false;
        for (const auto& [idx, c] : v) {
          auto it = swapped.find(idx);
          if (it == swapped.end() || it->second != -c) return false;
        }
      }
    }
  }
  return true;
}

template <typename Coeff>
Coeff unnormalized_inner(const CoefficientMap<Coeff>& a,
                         const CoefficientMap<Coeff>& b) {
  Coeff acc = 0;
  for (const auto& [idx, c] : a) {
    auto it = b.find(idx);
    if (it != b.end()) acc += c * it->second;
  }
  return acc;
}

}  // namespace kscheck

#endif  // KSCHECK_SYMMETRIZER_H_
