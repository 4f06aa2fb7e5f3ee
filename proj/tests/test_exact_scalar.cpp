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

#include <doctest.h>

#include <cmath>
#include <random>

#include "aq/errors.hpp"
#include "aq/exact_scalar.hpp"

using aq::ExactScalar;
using aq::Rational;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 9);
  Rational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

ExactScalar random_scalar(std::mt19937& rng, int q) { return {random_rational(rng), random_rational(rng), q}; }

double approx(const ExactScalar& x) { return x.a().get_d() + x.b().get_d() * std::sqrt(double(x.base())); }

}  // namespace

TEST_CASE("products and inverses on hand examples") {
  const ExactScalar one_plus(1, 1, 2);
  const ExactScalar one_minus(1, -1, 2);
  CHECK(one_plus * one_minus == ExactScalar::rational(-1, 2));
  CHECK(ExactScalar::sqrt_q(2) * ExactScalar::sqrt_q(2) == ExactScalar::rational(2, 2));
  const ExactScalar x(Rational(3, 7), Rational(-5, 2), 3);
  CHECK(ExactScalar::one(3) * x == x);

  CHECK(aq::ext_inv(ExactScalar::rational(2, 2)) == ExactScalar::rational(Rational(1, 2), 2));
  CHECK(aq::ext_inv(ExactScalar::sqrt_q(2)) == ExactScalar(0, Rational(1, 2), 2));
  const ExactScalar inv = aq::ext_inv(one_plus);
  CHECK(inv == ExactScalar(-1, 1, 2));
  CHECK(inv * one_plus == ExactScalar::one(2));
  CHECK_THROWS_AS(aq::ext_inv(ExactScalar(2)), std::domain_error);
}

TEST_CASE("field axioms hold on random elements") {
  std::mt19937 rng(20261018);
  for (int q : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 300; ++trial) {
      const ExactScalar x = random_scalar(rng, q);
      const ExactScalar y = random_scalar(rng, q);
      const ExactScalar z = random_scalar(rng, q);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + ExactScalar(q) == x);
      CHECK(x - x == ExactScalar(q));
      CHECK(x + (-x) == ExactScalar(q));
      if (!x.is_zero()) {
        CHECK(x * aq::ext_inv(x) == ExactScalar::one(q));
        CHECK((y / x) * x == y);
        CHECK(x.norm() * aq::ext_inv(x) == x.conjugate());
      }
      ExactScalar acc = z;
      fma(acc, x, y);
      CHECK(acc == z + x * y);
      CHECK(aq::ext_mul(x, y) == x * y);
    }
  }
}

TEST_CASE("sign agrees with floating point") {
  std::mt19937 rng(7);
  for (int q : {2, 3, 5}) {
    for (int trial = 0; trial < 200; ++trial) {
      const ExactScalar x = random_scalar(rng, q);
      const double v = approx(x);
      if (std::abs(v) < 1e-9) continue;
      CHECK(x.sign() == (v > 0 ? 1 : -1));
    }
  }
  CHECK(ExactScalar(2).sign() == 0);
  // 3 - 2*sqrt(2) is small but positive
  CHECK(ExactScalar(3, -2, 2).sign() == 1);
}

TEST_CASE("perfect-square bases fold into the rational part") {
  const ExactScalar x(1, 3, 4);
  CHECK(x.is_rational());
  CHECK(x.a() == 7);
  CHECK(ExactScalar::sqrt_q(9) == ExactScalar::rational(3, 9));
}

TEST_CASE("mixing bases is rejected") {
  const ExactScalar a = ExactScalar::sqrt_q(2);
  const ExactScalar b = ExactScalar::sqrt_q(3);
  CHECK_THROWS_AS(a + b, aq::BaseMismatch);
  CHECK_THROWS_AS(a * b, aq::BaseMismatch);
  // unbound zero mixes with anything
  CHECK(a + ExactScalar() == a);
  CHECK(ExactScalar() == ExactScalar(3));
}

TEST_CASE("powers of sqrt(q)") {
  CHECK(aq::sqrt_q_power(2, 0) == ExactScalar::one(2));
  CHECK(aq::sqrt_q_power(2, 3) == ExactScalar(0, 2, 2));
  CHECK(aq::sqrt_q_power(3, 4) == ExactScalar::rational(9, 3));
  CHECK(aq::sqrt_q_power(2, -1) == ExactScalar(0, Rational(1, 2), 2));
}

TEST_CASE("text form substitutes q") {
  CHECK(ExactScalar(0, 2, 2).str() == "2*sqrt(2)");
  CHECK(ExactScalar(1, -1, 3).str() == "1 - sqrt(3)");
  CHECK(ExactScalar(0, Rational(3, 2), 3).str() == "(3/2)*sqrt(3)");
  CHECK(ExactScalar::rational(Rational(-1, 8), 2).str() == "-1/8");
  CHECK(ExactScalar(0, -1, 2).str() == "-sqrt(2)");
}
