// Copyright 2026 The aqspace Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace aq {

using Integer = mpz_class;
using Rational = mpq_class;

/// An element a + b*sqrt(q) of the field Q(sqrt(q)).
///
/// A default-constructed scalar is an "unbound" zero (base 0) that adopts
/// the base of whatever it is combined with; this lets zero-initialized
/// storage mix freely with bound values. Any two bound scalars must share
/// their base, otherwise the operation throws BaseMismatch.
///
/// When q is a perfect square the irrational part is folded into the
/// rational part on construction, so b == 0 and equality stays structural.
class ExactScalar {
 public:
  ExactScalar() = default;
  explicit ExactScalar(int q);
  ExactScalar(Rational a, Rational b, int q);

  static ExactScalar rational(Rational a, int q) {
    return ExactScalar(std::move(a), Rational(0), q);
  }
  static ExactScalar one(int q) { return rational(Rational(1), q); }
  static ExactScalar sqrt_q(int q) { return ExactScalar(Rational(0), Rational(1), q); }

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  int base() const { return q_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  // Sign of the real number a + b*sqrt(q).
  int sign() const;

  ExactScalar conjugate() const { return ExactScalar(a_, -b_, q_); }
  // a^2 - q*b^2
  Rational norm() const;

  ExactScalar& operator+=(const ExactScalar& o);
  ExactScalar& operator-=(const ExactScalar& o);
  ExactScalar& operator*=(const ExactScalar& o);
  ExactScalar& operator/=(const ExactScalar& o);
  ExactScalar& operator*=(const Rational& r);

  ExactScalar operator-() const { return ExactScalar(-a_, -b_, q_); }

  friend ExactScalar operator+(ExactScalar x, const ExactScalar& y) { return x += y; }
  friend ExactScalar operator-(ExactScalar x, const ExactScalar& y) { return x -= y; }
  friend ExactScalar operator*(ExactScalar x, const ExactScalar& y) { return x *= y; }
  friend ExactScalar operator/(ExactScalar x, const ExactScalar& y) { return x /= y; }
  friend ExactScalar operator*(ExactScalar x, const Rational& r) { return x *= r; }
  friend ExactScalar operator*(const Rational& r, ExactScalar x) { return x *= r; }

  // Value equality. Unbound zero equals any zero; bound nonzero values of
  // different bases are rejected.
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

  // "a + b*sqrt(q)" with q substituted, e.g. "2*sqrt(2)", "1 - sqrt(3)".
  std::string str() const;

  // acc += x * y without intermediate scalars.
  friend void fma(ExactScalar& acc, const ExactScalar& x, const ExactScalar& y);

 private:
  void normalize();

  int q_ = 0;
  Rational a_;
  Rational b_;
};

ExactScalar ext_mul(const ExactScalar& x, const ExactScalar& y);
// Throws std::domain_error on zero input.
ExactScalar ext_inv(const ExactScalar& x);

// (sqrt q)^k for any integer k.
ExactScalar sqrt_q_power(int q, int k);

std::ostream& operator<<(std::ostream& os, const ExactScalar& x);

}  // namespace aq
