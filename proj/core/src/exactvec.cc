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

#include "kscheck/exactvec.h"

#include <limits>
#include <numeric>
#include <sstream>

#include "kscheck/error.h"

namespace kscheck {
namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw Error(std::string(op) + ": dimension mismatch (" +
                std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace

Direction Direction::canonicalize(std::span<const std::int64_t> raw) {
  std::uint64_t g = 0;
  for (std::int64_t x : raw) {
    if (x == std::numeric_limits<std::int64_t>::min()) {
      throw Error("direction component out of range");
    }
    g = std::gcd(g, static_cast<std::uint64_t>(x < 0 ? -x : x));
  }
  if (g == 0) throw Error("zero direction");

  std::vector<std::int64_t> out(raw.begin(), raw.end());
  const auto div = static_cast<std::int64_t>(g);
  bool flip = false;
  for (std::int64_t x : out) {
    if (x != 0) {
      flip = x < 0;
      break;
    }
  }
  for (std::int64_t& x : out) {
    x /= div;
    if (flip) x = -x;
  }
  return Direction(std::move(out));
}

Direction Direction::canonicalize(std::initializer_list<std::int64_t> raw) {
  return canonicalize(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

std::int64_t Direction::norm_squared() const { return inner(*this, *this); }

std::string Direction::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(components_[i]);
  }
  return s + ")";
}

std::int64_t inner(const Direction& u, const Direction& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    std::int64_t term = 0;
    if (__builtin_mul_overflow(u[i], v[i], &term) ||
        __builtin_add_overflow(acc, term, &acc)) {
      throw Error("inner: result exceeds 64-bit range");
    }
  }
  return acc;
}

RationalVector RationalVector::from_integers(
    std::span<const std::int64_t> values) {
  std::vector<Rational> entries;
  entries.reserve(values.size());
  for (std::int64_t x : values) entries.emplace_back(to_bigint(x));
  return RationalVector(std::move(entries));
}

RationalVector RationalVector::from_direction(const Direction& v) {
  return from_integers(v.components());
}

bool RationalVector::is_zero() const {
  for (const auto& x : entries_) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RationalVector RationalVector::scaled(const Rational& k) const {
  std::vector<Rational> out(entries_);
  for (auto& x : out) x *= k;
  return RationalVector(std::move(out));
}

Rational inner(const RationalVector& u, const RationalVector& v) {
  require_same_dim(u.dim(), v.dim(), "inner");
  Rational acc = 0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += u[i] * v[i];
  return acc;
}

RationalMatrix::RationalMatrix(std::size_t m)
    : dim_(m), entries_(m * m, Rational(0)) {
  if (m == 0) throw Error("matrix dimension must be positive");
}

RationalMatrix RationalMatrix::identity(std::size_t m) {
  RationalMatrix out(m);
  for (std::size_t i = 0; i < m; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_rows(
    const std::vector<std::vector<Rational>>& rows) {
  RationalMatrix out(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_same_dim(rows[r].size(), rows.size(), "from_rows");
    for (std::size_t c = 0; c < rows.size(); ++c) {
      out(r, c) = rows[r][c];
      out(r, c).canonicalize();
    }
  }
  return out;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(dim_);
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

bool RationalMatrix::is_symmetric() const { return *this == transpose(); }

bool RationalMatrix::is_scalar() const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (r == c ? (*this)(r, c) != (*this)(0, 0) : sgn((*this)(r, c)) != 0) {
        return false;
      }
    }
  }
  return true;
}

RationalMatrix& RationalMatrix::operator+=(const RationalMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator-=(const RationalMatrix& rhs) {
  require_same_dim(dim_, rhs.dim_, "matrix subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

RationalMatrix& RationalMatrix::operator*=(const Rational& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_dim(a.dim_, b.dim_, "matrix multiply");
  const std::size_t m = a.dim_;
  RationalMatrix out(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < m; ++k) {
      const Rational& ark = a(r, k);
      if (sgn(ark) == 0) continue;
      for (std::size_t c = 0; c < m; ++c) out(r, c) += ark * b(k, c);
    }
  }
  return out;
}

RationalVector operator*(const RationalMatrix& a, const RationalVector& x) {
  require_same_dim(a.dim_, x.dim(), "matrix-vector multiply");
  std::vector<Rational> out(a.dim_, Rational(0));
  for (std::size_t r = 0; r < a.dim_; ++r) {
    for (std::size_t c = 0; c < a.dim_; ++c) out[r] += a(r, c) * x[c];
  }
  return RationalVector(std::move(out));
}

RationalMatrix projector(const Direction& v) {
  const std::size_t m = v.dim();
  const BigInt norm = to_bigint(v.norm_squared());
  RationalMatrix out(m);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      Rational& e = out(r, c);
      e = Rational(to_bigint(v[r]) * to_bigint(v[c]), norm);
      e.canonicalize();
    }
  }
  return out;
}

RationalMatrix observable(const Direction& v) {
  return RationalMatrix::identity(v.dim()) - Rational(2) * projector(v);
}

Rational quadratic_form(const RationalMatrix& m, const RationalVector& x) {
  return inner(x, m * x);
}

double to_double(const Rational& q) { return q.get_d(); }

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace kscheck
