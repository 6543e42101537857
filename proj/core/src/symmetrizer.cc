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
#include <cstdlib>
#include <functional>
#include <numeric>
#include <set>

namespace kscheck {
namespace {

BigInt binomial(int top, int bottom) {
  if (bottom < 0 || bottom > top) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top),
               static_cast<unsigned long>(bottom));
  return out;
}

void require_positive(int n, int d) {
  if (n < 1 || d < 1) {
    throw Error("dimension formulas need n >= 1 and d >= 1");
  }
}

// Nondecreasing (bosonic) or strictly increasing (fermionic) level tuples of
// length n over [0, d), in lexicographic order.
std::vector<std::vector<int>> level_combinations(int n, int d, bool strict) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int l = lo; l < d; ++l) {
      cur.push_back(l);
      rec(strict ? l + 1 : l);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

int inversion_parity_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] > seq[j]) ++inversions;
    }
  }
  return inversions % 2 == 0 ? 1 : -1;
}

// Splits n = q^2 * s with s square-free; returns {q, s}.
std::pair<std::int64_t, std::int64_t> split_square(std::int64_t n) {
  std::int64_t q = 1;
  std::int64_t s = n;
  for (std::int64_t p = 2; p * p <= s; ++p) {
    while (s % (p * p) == 0) {
      s /= p * p;
      q *= p;
    }
  }
  return {q, s};
}

std::string level_symbol(int level, int d) {
  if (d == 3) {
    static const char* kQutrit[] = {"+", "0", "-"};
    return kQutrit[level];
  }
  return std::to_string(level);
}

// "(|+-> + 2|00> + |-+>)", or just "|++>" for a single unit ket.
template <typename Coeff>
std::string render_combination(const CoefficientMap<Coeff>& coeffs, int d) {
  if (coeffs.size() == 1 && coeffs.begin()->second == 1) {
    return render_ket(coeffs.begin()->first, d);
  }
  std::string out = "(";
  bool first = true;
  for (const auto& [idx, c] : coeffs) {
    Coeff mag = c < 0 ? Coeff(-c) : c;
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (mag != 1) {
      if constexpr (std::is_same_v<Coeff, Rational>) {
        out += mag.get_str();
      } else {
        out += std::to_string(mag);
      }
    }
    out += render_ket(idx, d);
  }
  return out + ")";
}

std::string amplitude_prefix(const Rational& mag, std::int64_t normsq) {
  if (normsq == 1) return mag == 1 ? "" : mag.get_str();
  return "(" + mag.get_str() + "/√" + std::to_string(normsq) + ")";
}

}  // namespace

std::string to_string(Statistics s) {
  return s == Statistics::kBosonic ? "boson" : "fermion";
}

std::string to_string(ScenarioClass::Kind k) {
  switch (k) {
    case ScenarioClass::Kind::kNoPhysicalStates:
      return "NoPhysicalStates";
    case ScenarioClass::Kind::kDimensionOne:
      return "DimensionOne";
    case ScenarioClass::Kind::kSicPossible:
      return "SICPossible";
  }
  return "?";
}

Scenario Scenario::make(int n, int d, Statistics statistics) {
  if (n < 2 || d < 2) throw Error("scenario needs n >= 2 and d >= 2");
  return Scenario{n, d, statistics};
}

BigInt dim_symmetric(int n, int d) {
  require_positive(n, d);
  return binomial(d + n - 1, n);
}

BigInt dim_antisymmetric(int n, int d) {
  require_positive(n, d);
  return binomial(d, n);
}

ScenarioClass classify(const Scenario& s) {
  using Kind = ScenarioClass::Kind;
  if (s.statistics == Statistics::kBosonic) {
    return {Kind::kSicPossible, dim_symmetric(s.n, s.d)};
  }
  if (s.n > s.d) return {Kind::kNoPhysicalStates, 0};
  if (s.n == s.d) return {Kind::kDimensionOne, 1};
  return {Kind::kSicPossible, dim_antisymmetric(s.n, s.d)};
}

bool scan_no_dim_two(int n_max, int d_max) {
  for (int n = 2; n <= n_max; ++n) {
    for (int d = 2; d <= d_max; ++d) {
      if (dim_symmetric(n, d) == 2 || dim_antisymmetric(n, d) == 2) {
        return false;
      }
    }
  }
  return true;
}

SubspaceBasisVector SubspaceBasisVector::make(
    CoefficientMap<std::int64_t> coefficients) {
  std::erase_if(coefficients, [](const auto& kv) { return kv.second == 0; });
  if (coefficients.empty()) throw Error("basis vector has no nonzero coefficient");
  const std::size_t n = coefficients.begin()->first.levels.size();
  std::int64_t normsq = 0;
  for (const auto& [idx, c] : coefficients) {
    if (idx.levels.size() != n) throw Error("basis vector: mixed arity");
    normsq += c * c;
  }
  return SubspaceBasisVector(std::move(coefficients), normsq);
}

std::int64_t SubspaceBasisVector::coefficient(
    const ProductBasisIndex& idx) const {
  auto it = coefficients_.find(idx);
  return it == coefficients_.end() ? 0 : it->second;
}

SubspaceBasisVector SubspaceBasisVector::negated() const {
  CoefficientMap<std::int64_t> c = coefficients_;
  for (auto& [idx, x] : c) x = -x;
  return SubspaceBasisVector(std::move(c), normsq_);
}

namespace internal {
void check_permutation(const Permutation& perm) {
  std::vector<bool> seen(perm.size(), false);
  for (int p : perm) {
    if (p < 0 || p >= static_cast<int>(perm.size()) || seen[p]) {
      throw Error("not a permutation");
    }
    seen[p] = true;
  }
}
}  // namespace internal

int permutation_sign(const Permutation& perm) {
  internal::check_permutation(perm);
  return inversion_parity_sign(perm);
}

Permutation transposition(int n, int i, int j) {
  if (i < 0 || j < 0 || i >= n || j >= n) throw Error("transposition out of range");
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  std::swap(p[i], p[j]);
  return p;
}

SubspaceBasisVector permute(const Permutation& perm,
                            const SubspaceBasisVector& v) {
  return SubspaceBasisVector::make(permute(perm, v.coefficients()));
}

bool verify_symmetry(const SubspaceBasisVector& v, Statistics statistics) {
  return verify_symmetry(v.coefficients(), statistics);
}

BasisCheck check_basis(const SubspaceBasis& basis) {
  BasisCheck out;
  const auto& vs = basis.vectors;
  out.pairwise_orthogonal = true;
  for (std::size_t i = 0; i < vs.size() && out.pairwise_orthogonal; ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (unnormalized_inner(vs[i].coefficients(), vs[j].coefficients()) != 0) {
        out.pairwise_orthogonal = false;
        break;
      }
    }
  }
  out.symmetry = std::all_of(vs.begin(), vs.end(), [&](const auto& v) {
    return v.arity() == basis.scenario.n &&
           verify_symmetry(v, basis.scenario.statistics);
  });
  const BigInt expected =
      basis.scenario.statistics == Statistics::kBosonic
          ? dim_symmetric(basis.scenario.n, basis.scenario.d)
          : dim_antisymmetric(basis.scenario.n, basis.scenario.d);
  out.count_matches_dimension = expected == BigInt(static_cast<unsigned long>(vs.size()));
  return out;
}

SubspaceBasis generate_basis(const Scenario& s) {
  if (classify(s).kind == ScenarioClass::Kind::kNoPhysicalStates) {
    throw Error("empty subspace");
  }
  const bool fermionic = s.statistics == Statistics::kFermionic;
  SubspaceBasis out{s, {}};
  for (const auto& combo : level_combinations(s.n, s.d, fermionic)) {
    CoefficientMap<std::int64_t> coeffs;
    std::vector<int> arrangement = combo;
    do {
      coeffs[ProductBasisIndex{arrangement}] =
          fermionic ? inversion_parity_sign(arrangement) : 1;
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    out.vectors.push_back(SubspaceBasisVector::make(std::move(coeffs)));
  }
  return out;
}

SubspaceBasis paper_basis(PaperBasis which) {
  constexpr int kPlus = 0, kZero = 1, kMinus = 2;
  auto ket = [](int a, int b) { return ProductBasisIndex{{a, b}}; };
  auto vec = [](CoefficientMap<std::int64_t> c) {
    return SubspaceBasisVector::make(std::move(c));
  };
  if (which == PaperBasis::kBosonTwoQutrits) {
    return SubspaceBasis{
        Scenario{2, 3, Statistics::kBosonic},
        {
            vec({{ket(kPlus, kPlus), 1}}),
            vec({{ket(kPlus, kZero), 1}, {ket(kZero, kPlus), 1}}),
            vec({{ket(kPlus, kMinus), 1},
                 {ket(kZero, kZero), 2},
                 {ket(kMinus, kPlus), 1}}),
            vec({{ket(kZero, kMinus), 1}, {ket(kMinus, kZero), 1}}),
            vec({{ket(kMinus, kMinus), 1}}),
            vec({{ket(kPlus, kMinus), 1},
                 {ket(kZero, kZero), -1},
                 {ket(kMinus, kPlus), 1}}),
        }};
  }
  return SubspaceBasis{
      Scenario{2, 3, Statistics::kFermionic},
      {
          vec({{ket(kPlus, kZero), 1}, {ket(kZero, kPlus), -1}}),
          vec({{ket(kPlus, kMinus), 1}, {ket(kMinus, kPlus), -1}}),
          vec({{ket(kZero, kMinus), 1}, {ket(kMinus, kZero), -1}}),
      }};
}

bool equal_up_to_sign_and_order(const SubspaceBasis& a,
                                const SubspaceBasis& b) {
  if (a.vectors.size() != b.vectors.size()) return false;
  std::vector<bool> used(b.vectors.size(), false);
  for (const auto& v : a.vectors) {
    const auto neg = v.negated();
    bool matched = false;
    for (std::size_t j = 0; j < b.vectors.size(); ++j) {
      if (!used[j] && (b.vectors[j] == v || b.vectors[j] == neg)) {
        used[j] = matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

LiftedVector lift(std::span<const std::int64_t> coords,
                  const SubspaceBasis& basis) {
  if (coords.size() != basis.vectors.size()) {
    throw Error("lift: coordinate count " + std::to_string(coords.size()) +
                " does not match basis size " +
                std::to_string(basis.vectors.size()));
  }
  LiftedVector out;
  out.n = basis.scenario.n;
  out.d = basis.scenario.d;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k] == 0) continue;
    const auto& bv = basis.vectors[k];
    out.terms.push_back({k, Rational(to_bigint(coords[k])), bv.normsq()});
    const auto [q, radical] = split_square(bv.normsq());
    Rational scale(to_bigint(coords[k]), to_bigint(q));
    scale.canonicalize();
    auto& group = out.by_radical[radical];
    for (const auto& [idx, c] : bv.coefficients()) {
      group[idx] += scale * to_bigint(c);
    }
  }
  for (auto it = out.by_radical.begin(); it != out.by_radical.end();) {
    std::erase_if(it->second, [](const auto& kv) { return sgn(kv.second) == 0; });
    it = it->second.empty() ? out.by_radical.erase(it) : std::next(it);
  }
  return out;
}

LiftedVector lift(const Direction& v, const SubspaceBasis& basis) {
  return lift(v.components(), basis);
}

bool verify_symmetry(const LiftedVector& v, Statistics statistics) {
  return std::all_of(v.by_radical.begin(), v.by_radical.end(),
                     [&](const auto& kv) {
                       return verify_symmetry(kv.second, statistics);
                     });
}

std::string render_ket(const ProductBasisIndex& idx, int d) {
  std::string out = "|";
  for (std::size_t i = 0; i < idx.levels.size(); ++i) {
    if (d > 10 && i) out += ",";
    out += level_symbol(idx.levels[i], d);
  }
  return out + "⟩";
}

std::string render(const SubspaceBasisVector& v, int d) {
  return amplitude_prefix(Rational(1), v.normsq()) +
         render_combination(v.coefficients(), d);
}

std::string render(const LiftedVector& v, const SubspaceBasis& basis) {
  if (v.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : v.terms) {
    const bool negative = sgn(term.coefficient) < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    out += amplitude_prefix(abs(term.coefficient), term.normsq);
    out += render_combination(basis.vectors.at(term.basis_index).coefficients(),
                              v.d);
  }
  return out;
}

}  // namespace kscheck
