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

#include "aq/qcomb.hpp"

#include <stdexcept>

namespace aq {
namespace {

void check_base(int q) {
  if (q < 2) throw std::invalid_argument("q must be >= 2");
}

}  // namespace

Integer int_pow(int q, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return p;
}

Rational q_int(int n, int q) {
  check_base(q);
  if (n < 0) throw std::invalid_argument("q_int needs n >= 0");
  Rational r(Integer(int_pow(q, n) - 1), Integer(q - 1));
  r.canonicalize();
  return r;
}

Rational q_factorial(int n, int q) {
  Rational f(1);
  for (int k = 2; k <= n; ++k) f *= q_int(k, q);
  return f;
}

Rational q_binomial(int n, int i, int q) {
  check_base(q);
  if (n < 0 || i < 0 || i > n) return Rational(0);
  // multiplicative form keeps intermediates small
  Rational c(1);
  for (int k = 0; k < i; ++k) c *= q_int(n - k, q) / q_int(k + 1, q);
  return c;
}

Rational mu(int r, int N, int M, int q) {
  check_base(q);
  if (r < 0) return Rational(0);
  Rational m = q_binomial(N, r, q) * q_binomial(M, r, q);
  if (sgn(m) == 0) return m;
  const Integer qr = int_pow(q, r);
  for (int k = 0; k < r; ++k) m *= Rational(qr - int_pow(q, k));
  return m;
}

}  // namespace aq
