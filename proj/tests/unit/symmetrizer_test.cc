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

#include "kscheck/symmetrizer.h"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "gtest/gtest.h"
#include "kscheck/kssets.h"

namespace kscheck {
namespace {

using Map = CoefficientMap<std::int64_t>;

ProductBasisIndex idx(std::vector<int> levels) { return {std::move(levels)}; }

// Counts level tuples of length n over d levels that are nondecreasing
// (strict = false) or strictly increasing (strict = true).
long count_sorted_tuples(int n, int d, bool strict) {
  long count = 0;
  std::vector<int> t(n, 0);
  while (true) {
    bool ok = true;
    for (int i = 1; i < n; ++i) {
      if (strict ? t[i] <= t[i - 1] : t[i] < t[i - 1]) ok = false;
    }
    count += ok;
    int k = n - 1;
    while (k >= 0 && ++t[k] == d) t[k--] = 0;
    if (k < 0) break;
  }
  return count;
}

// Binomial coefficients by Pascal's rule.
std::vector<std::vector<BigInt>> pascal(int rows) {
  std::vector<std::vector<BigInt>> c(rows + 1, std::vector<BigInt>(rows + 1, 0));
  for (int i = 0; i <= rows; ++i) {
    c[i][0] = 1;
    for (int j = 1; j <= i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

Permutation random_permutation(std::mt19937_64& rng, int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

TEST(Dimensions, Examples) {
  EXPECT_EQ(dim_symmetric(2, 3), 6);
  EXPECT_EQ(dim_symmetric(2, 2), 3);
  EXPECT_EQ(dim_symmetric(3, 3), 10);
  EXPECT_EQ(dim_antisymmetric(2, 3), 3);
  EXPECT_EQ(dim_antisymmetric(3, 2), 0);
  for (int d = 1; d <= 12; ++d) EXPECT_EQ(dim_antisymmetric(d, d), 1);
}

TEST(Dimensions, NonpositiveArgumentsThrow) {
  EXPECT_THROW(dim_symmetric(0, 3), Error);
  EXPECT_THROW(dim_symmetric(2, 0), Error);
  EXPECT_THROW(dim_antisymmetric(-1, 3), Error);
  EXPECT_THROW(dim_antisymmetric(2, 0), Error);
}

TEST(Dimensions, AgreeWithTupleCounting) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 1; d <= 6; ++d) {
      EXPECT_EQ(dim_symmetric(n, d), count_sorted_tuples(n, d, false))
          << n << " " << d;
      EXPECT_EQ(dim_antisymmetric(n, d), count_sorted_tuples(n, d, true))
          << n << " " << d;
    }
  }
}

TEST(Dimensions, LargeArgumentsAreExact) {
  const auto c = pascal(80);
  EXPECT_EQ(dim_symmetric(40, 41), c[80][40]);
  EXPECT_EQ(dim_antisymmetric(30, 70), c[70][30]);
}

TEST(Classify, Examples) {
  using K = ScenarioClass::Kind;
  EXPECT_EQ(classify(Scenario::make(2, 2, Statistics::kFermionic)),
            (ScenarioClass{K::kDimensionOne, 1}));
  EXPECT_EQ(classify(Scenario::make(2, 3, Statistics::kBosonic)),
            (ScenarioClass{K::kSicPossible, 6}));
  EXPECT_EQ(classify(Scenario::make(2, 4, Statistics::kFermionic)),
            (ScenarioClass{K::kSicPossible, 6}));
  EXPECT_EQ(classify(Scenario::make(3, 2, Statistics::kFermionic)),
            (ScenarioClass{K::kNoPhysicalStates, 0}));
  EXPECT_EQ(classify(Scenario::make(3, 3, Statistics::kFermionic)).kind,
            K::kDimensionOne);
  EXPECT_EQ(to_string(K::kSicPossible), "SICPossible");
  EXPECT_EQ(to_string(K::kNoPhysicalStates), "NoPhysicalStates");
  EXPECT_EQ(to_string(K::kDimensionOne), "DimensionOne");
}

TEST(Classify, InvalidScenario) {
  EXPECT_THROW(Scenario::make(1, 3, Statistics::kBosonic), Error);
  EXPECT_THROW(Scenario::make(2, 1, Statistics::kBosonic), Error);
}

TEST(Classify, AgreesWithDimensionFormulas) {
  const auto c = pascal(45);
  for (int n = 2; n <= 20; ++n) {
    for (int d = 2; d <= 20; ++d) {
      for (auto st : {Statistics::kBosonic, Statistics::kFermionic}) {
        const BigInt dim = st == Statistics::kBosonic ? c[n + d - 1][n]
                           : n <= d                   ? c[d][n]
                                                      : BigInt(0);
        const auto got = classify(Scenario::make(n, d, st));
        EXPECT_EQ(got.dim, dim);
        EXPECT_NE(dim, 2);
        const auto want = dim == 0   ? ScenarioClass::Kind::kNoPhysicalStates
                          : dim == 1 ? ScenarioClass::Kind::kDimensionOne
                                     : ScenarioClass::Kind::kSicPossible;
        EXPECT_EQ(got.kind, want);
      }
    }
  }
}

TEST(ScanNoDimensionTwo, Examples) {
  EXPECT_TRUE(scan_no_dim_two(2, 2));
  EXPECT_TRUE(scan_no_dim_two(8, 8));
  EXPECT_TRUE(scan_no_dim_two(20, 20));
}

TEST(Permute, Transposition) {
  const Map ket{{idx({0, 1}), 1}};
  EXPECT_EQ(permute(transposition(2, 0, 1), ket), (Map{{idx({1, 0}), 1}}));
  EXPECT_THROW(permute(Permutation{0, 1, 2}, ket), Error);
  EXPECT_THROW(permute(Permutation{0, 0}, ket), Error);
}

TEST(Permute, PaperBasisVectors) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  const auto swap = transposition(2, 0, 1);
  EXPECT_EQ(permute(swap, boson.vectors[1]), boson.vectors[1]);
  EXPECT_EQ(permute(swap, fermion.vectors[1]), fermion.vectors[1].negated());
}

TEST(VerifySymmetry, Examples) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  EXPECT_TRUE(verify_symmetry(boson.vectors[2], Statistics::kBosonic));
  EXPECT_TRUE(verify_symmetry(fermion.vectors[0], Statistics::kFermionic));
  EXPECT_FALSE(verify_symmetry(Map{{idx({0, 1}), 1}}, Statistics::kBosonic));
  EXPECT_FALSE(verify_symmetry(fermion.vectors[0], Statistics::kBosonic));
  EXPECT_FALSE(verify_symmetry(boson.vectors[1], Statistics::kFermionic));
}

TEST(PermutationSign, Basics) {
  EXPECT_EQ(permutation_sign({0, 1, 2}), 1);
  EXPECT_EQ(permutation_sign({1, 0, 2}), -1);
  EXPECT_EQ(permutation_sign({1, 2, 0}), 1);
  EXPECT_EQ(permutation_sign({3, 2, 1, 0}), 1);
}

TEST(SubspaceBasisVector, Construction) {
  const auto v = SubspaceBasisVector::make(
      {{idx({0, 2}), 1}, {idx({1, 1}), 2}, {idx({2, 0}), 1}, {idx({0, 0}), 0}});
  EXPECT_EQ(v.normsq(), 6);
  EXPECT_EQ(v.coefficients().size(), 3u);
  EXPECT_EQ(v.coefficient(idx({1, 1})), 2);
  EXPECT_EQ(v.coefficient(idx({0, 0})), 0);
  EXPECT_EQ(v.arity(), 2);
  EXPECT_THROW(SubspaceBasisVector::make({{idx({0, 1}), 0}}), Error);
  EXPECT_THROW(SubspaceBasisVector::make({{idx({0, 1}), 1}, {idx({0}), 1}}),
               Error);
}

TEST(GenerateBasis, Examples) {
  const auto f = generate_basis(Scenario::make(2, 3, Statistics::kFermionic));
  ASSERT_EQ(f.vectors.size(), 3u);
  for (const auto& v : f.vectors) {
    ASSERT_EQ(v.coefficients().size(), 2u);
    EXPECT_EQ(v.coefficients().begin()->second, 1);
    EXPECT_EQ(v.coefficients().rbegin()->second, -1);
  }
  EXPECT_TRUE(
      equal_up_to_sign_and_order(f, paper_basis(PaperBasis::kFermionTwoQutrits)));

  const auto b = generate_basis(Scenario::make(2, 2, Statistics::kBosonic));
  ASSERT_EQ(b.vectors.size(), 3u);
  EXPECT_EQ(b.vectors[0], SubspaceBasisVector::make({{idx({0, 0}), 1}}));
  EXPECT_EQ(b.vectors[1],
            SubspaceBasisVector::make({{idx({0, 1}), 1}, {idx({1, 0}), 1}}));
  EXPECT_EQ(b.vectors[2], SubspaceBasisVector::make({{idx({1, 1}), 1}}));

  const auto s = generate_basis(Scenario::make(2, 3, Statistics::kBosonic));
  EXPECT_EQ(s.vectors.size(), 6u);
  EXPECT_TRUE(check_basis(s).ok());
}

TEST(GenerateBasis, EmptySubspace) {
  try {
    generate_basis(Scenario::make(3, 2, Statistics::kFermionic));
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "empty subspace");
  }
}

TEST(GenerateBasis, SymmetricCountsAndChecks) {
  for (int n = 2; n <= 5; ++n) {
    for (int d = 2; d <= 5; ++d) {
      const auto b = generate_basis(Scenario::make(n, d, Statistics::kBosonic));
      EXPECT_EQ(BigInt(b.vectors.size()), dim_symmetric(n, d));
      EXPECT_TRUE(check_basis(b).ok()) << n << " " << d;
    }
  }
}

TEST(GenerateBasis, AntisymmetricCountsAndChecks) {
  for (int n = 2; n <= 6; ++n) {
    for (int d = n; d <= 6; ++d) {
      const auto b =
          generate_basis(Scenario::make(n, d, Statistics::kFermionic));
      EXPECT_EQ(BigInt(b.vectors.size()), dim_antisymmetric(n, d));
      EXPECT_TRUE(check_basis(b).ok()) << n << " " << d;
    }
  }
}

TEST(GenerateBasis, RandomPermutationsActBySign) {
  std::mt19937_64 rng(201);
  for (auto st : {Statistics::kBosonic, Statistics::kFermionic}) {
    for (int n = 2; n <= 4; ++n) {
      const auto b = generate_basis(Scenario::make(n, 4, st));
      for (int trial = 0; trial < 20; ++trial) {
        const auto p = random_permutation(rng, n);
        const bool flip = st == Statistics::kFermionic && permutation_sign(p) < 0;
        for (const auto& v : b.vectors) {
          EXPECT_EQ(permute(p, v), flip ? v.negated() : v);
        }
      }
    }
  }
}

TEST(PaperBasis, NormsAndChecks) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  std::vector<std::int64_t> bn, fn;
  for (const auto& v : boson.vectors) bn.push_back(v.normsq());
  for (const auto& v : fermion.vectors) fn.push_back(v.normsq());
  EXPECT_EQ(bn, (std::vector<std::int64_t>{1, 2, 6, 2, 1, 3}));
  EXPECT_EQ(fn, (std::vector<std::int64_t>{2, 2, 2}));
  EXPECT_TRUE(check_basis(boson).ok());
  EXPECT_TRUE(check_basis(fermion).ok());
}

TEST(PaperBasis, MatchesPrintedKets) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  EXPECT_EQ(render(boson.vectors[0], 3), "|++⟩");
  EXPECT_EQ(render(boson.vectors[1], 3), "(1/√2)(|+0⟩ + |0+⟩)");
  EXPECT_EQ(render(boson.vectors[2], 3), "(1/√6)(|+-⟩ + 2|00⟩ + |-+⟩)");
  EXPECT_EQ(render(boson.vectors[3], 3), "(1/√2)(|0-⟩ + |-0⟩)");
  EXPECT_EQ(render(boson.vectors[4], 3), "|--⟩");
  EXPECT_EQ(render(boson.vectors[5], 3), "(1/√3)(|+-⟩ - |00⟩ + |-+⟩)");
  EXPECT_EQ(render(fermion.vectors[0], 3), "(1/√2)(|+0⟩ - |0+⟩)");
  EXPECT_EQ(render(fermion.vectors[1], 3), "(1/√2)(|+-⟩ - |-+⟩)");
  EXPECT_EQ(render(fermion.vectors[2], 3), "(1/√2)(|0-⟩ - |-0⟩)");
}

TEST(EqualUpToSign, DetectsDifferences) {
  const auto f = paper_basis(PaperBasis::kFermionTwoQutrits);
  auto flipped = f;
  flipped.vectors[1] = flipped.vectors[1].negated();
  std::swap(flipped.vectors[0], flipped.vectors[2]);
  EXPECT_TRUE(equal_up_to_sign_and_order(f, flipped));
  auto shorter = f;
  shorter.vectors.pop_back();
  EXPECT_FALSE(equal_up_to_sign_and_order(f, shorter));
  EXPECT_FALSE(equal_up_to_sign_and_order(
      f, paper_basis(PaperBasis::kBosonTwoQutrits)));
}

TEST(Lift, Examples) {
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  EXPECT_EQ(render(lift(Direction::canonicalize({1, 0, 0}), fermion), fermion),
            "(1/√2)(|+0⟩ - |0+⟩)");
  const std::vector<std::int64_t> v{1, 0, -1, 0, 0, 0};
  EXPECT_EQ(render(lift(v, boson), boson), "|++⟩ - (1/√6)(|+-⟩ + 2|00⟩ + |-+⟩)");
  EXPECT_THROW(lift(Direction::canonicalize({1, 0}), fermion), Error);
}

TEST(Lift, RadicalGroups) {
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  // |2̂> and |5̂> carry 1/√6 and 1/√3, which do not combine rationally.
  const std::vector<std::int64_t> v{0, 0, 1, 0, 0, 1};
  const auto l = lift(v, boson);
  EXPECT_EQ(l.by_radical.size(), 2u);
  EXPECT_TRUE(verify_symmetry(l, Statistics::kBosonic));
}

TEST(Lift, BuiltInSetsKeepTheirSymmetry) {
  const auto fermion = paper_basis(PaperBasis::kFermionTwoQutrits);
  const auto boson = paper_basis(PaperBasis::kBosonTwoQutrits);
  const auto a3 = build_A3();
  for (const auto& v : a3.members()) {
    const auto l = lift(v, fermion);
    EXPECT_TRUE(verify_symmetry(l, Statistics::kFermionic)) << v.to_string();
    EXPECT_FALSE(verify_symmetry(l, Statistics::kBosonic)) << v.to_string();
  }
  const auto s6 = build_S6();
  for (const auto& v : s6.members()) {
    EXPECT_TRUE(verify_symmetry(lift(v, boson), Statistics::kBosonic))
        << v.to_string();
  }
}

TEST(Lift, LinearCombinationsStaySymmetric) {
  std::mt19937_64 rng(202);
  std::uniform_int_distribution<std::int64_t> dist(-5, 5);
  for (int n = 2; n <= 3; ++n) {
    for (auto st : {Statistics::kBosonic, Statistics::kFermionic}) {
      const auto b = generate_basis(Scenario::make(n, 4, st));
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<std::int64_t> c(b.vectors.size());
        for (auto& x : c) x = dist(rng);
        EXPECT_TRUE(verify_symmetry(lift(c, b), st));
      }
    }
  }
}

TEST(Render, DigitsOutsideQutrits) {
  EXPECT_EQ(render_ket(idx({0, 1, 3}), 4), "|013⟩");
  EXPECT_EQ(render_ket(idx({0, 1, 2}), 3), "|+0-⟩");
}

}  // namespace
}  // namespace kscheck
