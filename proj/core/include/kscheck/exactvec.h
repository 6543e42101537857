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

// Exact integer rays and rational matrices.
//
// Everything in this header is exact. There is no floating-point path: the
// only place a double appears is `to_double` for display.

#ifndef KSCHECK_EXACTVEC_H_
#define KSCHECK_EXACTVEC_H_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kscheck {

using BigInt = mpz_class;
using Rational = mpq_class;

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 target required");
inline BigInt to_bigint(std::int64_t x) { return BigInt(static_cast<long>(x)); }

// A ray through the origin of Z^m, stored by its unique primitive
// representative: gcd of the components is 1 and the first nonzero component
// is positive.
class Direction {
 public:
  // Throws Error("zero direction") for the zero vector or an empty input.
  static Direction canonicalize(std::span<const std::int64_t> raw);
  static Direction canonicalize(std::initializer_list<std::int64_t> raw);

  std::span<const std::int64_t> components() const { return components_; }
  std::size_t dim() const { return components_.size(); }
  std::int64_t operator[](std::size_t i) const { return components_[i]; }
  std::int64_t norm_squared() const;

  // "(1,-2,1)"
  std::string to_string() const;

  friend bool operator==(const Direction&, const Direction&) = default;
  friend auto operator<=>(const Direction&, const Direction&) = default;

 private:
  explicit Direction(std::vector<std::int64_t> components)
      : components_(std::move(components)) {}

  std::vector<std::int64_t> components_;
};

// Dot product of the canonical components. Throws on dimension mismatch or
// if the result does not fit in 64 bits.
std::int64_t inner(const Direction& u, const Direction& v);

inline bool orthogonal(const Direction& u, const Direction& v) {
  return inner(u, v) == 0;
}

class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}
  static RationalVector from_integers(std::span<const std::int64_t> values);
  static RationalVector from_direction(const Direction& v);

  std::size_t dim() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }
  bool is_zero() const;

  RationalVector scaled(const Rational& k) const;

  friend bool operator==(const RationalVector&, const RationalVector&) = default;

 private:
  std::vector<Rational> entries_;
};

Rational inner(const RationalVector& u, const RationalVector& v);

// Square m x m matrix over Q, row-major. Every arithmetic operator checks
// shapes and throws Error on mismatch; equality is exact.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t m);  // zero matrix
  static RationalMatrix identity(std::size_t m);
  static RationalMatrix zero(std::size_t m) { return RationalMatrix(m); }
  // Rows given explicitly; throws if the rows are not square.
  static RationalMatrix from_rows(
      const std::vector<std::vector<Rational>>& rows);

  std::size_t dim() const { return dim_; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * dim_ + c];
  }
  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * dim_ + c];
  }

  Rational trace() const;
  RationalMatrix transpose() const;
  bool is_symmetric() const;
  bool is_scalar() const;  // c * identity for some c

  RationalMatrix& operator+=(const RationalMatrix& rhs);
  RationalMatrix& operator-=(const RationalMatrix& rhs);
  RationalMatrix& operator*=(const Rational& k);

  friend RationalMatrix operator+(RationalMatrix a, const RationalMatrix& b) {
    return a += b;
  }
  friend RationalMatrix operator-(RationalMatrix a, const RationalMatrix& b) {
    return a -= b;
  }
  friend RationalMatrix operator-(RationalMatrix a) {
    return a *= Rational(-1);
  }
  friend RationalMatrix operator*(const Rational& k, RationalMatrix a) {
    return a *= k;
  }
  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend RationalVector operator*(const RationalMatrix& a,
                                  const RationalVector& x);

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t dim_;
  std::vector<Rational> entries_;
};

// v v^T / (v . v): the rank-one orthogonal projector onto the ray.
RationalMatrix projector(const Direction& v);

// I - 2 projector(v): a +/-1 valued observable whose -1 eigenspace is the ray.
RationalMatrix observable(const Direction& v);

// x^T M x
Rational quadratic_form(const RationalMatrix& m, const RationalVector& x);

// Display only.
double to_double(const Rational& q);
std::string to_string(const Rational& q);

}  // namespace kscheck

#endif  // KSCHECK_EXACTVEC_H_
