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

#include "aq/exact_scalar.hpp"

// q-analogues of integers, factorials and binomial coefficients for a
// concrete integer q >= 2, plus the module multiplicity prefactor mu_r.

namespace aq {

// q^e for e >= 0.
Integer int_pow(int q, int e);

// [n]_q = (q^n - 1)/(q - 1), with [0]_q = 0.
Rational q_int(int n, int q);

// [n]_q [n-1]_q ... [1]_q, with [0]!_q = 1.
Rational q_factorial(int n, int q);

// Gaussian binomial coefficient; zero when i < 0 or i > n (or n < 0).
Rational q_binomial(int n, int i, int q);

// mu_r = binom(N,r)_q binom(M,r)_q (q^r - 1)(q^r - q)...(q^r - q^{r-1}).
// Zero for r < 0 and for r > min(N, M).
Rational mu(int r, int N, int M, int q);

}  // namespace aq
