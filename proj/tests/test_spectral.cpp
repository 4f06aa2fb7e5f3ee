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

#include "aq/spectral.hpp"

using aq::ExactMatrix;
using aq::ExactScalar;
using aq::HalfIndex;

namespace {

ExactScalar power(const ExactScalar& x, int k, int q) {
  ExactScalar r = ExactScalar::one(q);
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

// tr(A^k) = sum_i dim(E_i V) theta_i^k for every k; with 2N+1 distinct
// eigenvalues, k = 0..2N pins the dimensions down.
void check_power_traces(const aq::OperatorSet& ops, const aq::Spectrum& spectrum) {
  const int q = ops.q;
  ExactMatrix power_of_a = ExactMatrix::identity(ops.size(), q);
  for (int k = 0; k <= 2 * ops.N; ++k) {
    ExactScalar expected(q);
    for (const auto& e : spectrum.entries) {
      expected += power(e.theta, k, q) * aq::Rational(static_cast<unsigned long>(e.dim));
    }
    CAPTURE(k);
    CHECK(power_of_a.trace() == expected);
    power_of_a = ops.A * power_of_a;
  }
}

std::vector<std::size_t> dims_of(const aq::Spectrum& s) {
  std::vector<std::size_t> out;
  for (const auto& e : s.entries) out.push_back(e.dim);
  return out;
}

}  // namespace

TEST_CASE("half indices") {
  const auto idx = aq::half_indices(2);
  REQUIRE(idx.size() == 5);
  CHECK(idx[1].str() == "1/2");
  CHECK(idx[3].str() == "3/2");
  CHECK(idx[2].str() == "1");
  CHECK(idx[2].is_integer());
  CHECK(idx[1].reflected(2) == idx[3]);
}

TEST_CASE("eigenvalues in closed form") {
  const ExactScalar s2 = ExactScalar::sqrt_q(2);
  CHECK(aq::theta(2, 2, 2, HalfIndex{0}) == ExactScalar::rational(6, 2));
  CHECK(aq::theta(2, 2, 2, HalfIndex{1}) == s2 * aq::Rational(2));
  CHECK(aq::theta(2, 2, 2, HalfIndex{2}).is_zero());
  CHECK(aq::theta(2, 2, 2, HalfIndex{3}) == s2 * aq::Rational(-2));
  CHECK(aq::theta(2, 2, 2, HalfIndex{4}) == ExactScalar::rational(-6, 2));
  CHECK(aq::theta(3, 2, 1, HalfIndex{0}) == ExactScalar::sqrt_q(3) * aq::Rational(4));
  CHECK(aq::theta(3, 2, 1, HalfIndex{2}).is_zero());
  CHECK(aq::theta(2, 1, 1, HalfIndex{1}).is_zero());
}

TEST_CASE("eigenvalue differences factor") {
  for (auto [q, N, M] : {std::tuple{2, 2, 2}, {3, 2, 1}, {2, 3, 2}, {5, 3, 1}}) {
    for (HalfIndex i : aq::half_indices(N)) {
      for (HalfIndex j : aq::half_indices(N)) {
        CHECK(aq::theta(q, N, M, HalfIndex{-i.twice + 2 * N}) == -aq::theta(q, N, M, i));
        const ExactScalar factor = (aq::sqrt_q_power(q, j.twice) - aq::sqrt_q_power(q, i.twice)) *
                                   (aq::sqrt_q_power(q, 2 * N - i.twice - j.twice) + ExactScalar::one(q)) *
                                   aq::sqrt_q_power(q, M) * aq::Rational(1, q - 1);
        CHECK(aq::theta(q, N, M, i) - aq::theta(q, N, M, j) == factor);
      }
    }
  }
}

TEST_CASE("predicted dimensions") {
  auto values = [](int q, int N, int M) {
    std::vector<aq::Integer> out;
    for (const auto& [i, d] : aq::predicted_dims(q, N, M)) out.push_back(d);
    return out;
  };
  CHECK(values(2, 2, 2) == std::vector<aq::Integer>{1, 9, 9, 9, 1});
  CHECK(values(3, 2, 1) == std::vector<aq::Integer>{1, 8, 4, 8, 1});
  CHECK(values(2, 1, 1) == std::vector<aq::Integer>{1, 1, 1});
  CHECK(values(2, 3, 2) == std::vector<aq::Integer>{1, 21, 49, 63, 49, 21, 1});
}

TEST_CASE("computed spectra match power traces and predictions") {
  for (auto [q, N, M] : {std::tuple{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {3, 2, 1}}) {
    CAPTURE(q);
    CAPTURE(N);
    CAPTURE(M);
    const auto ops = aq::build_operators(aq::build_poset(q, N, M));
    const auto spectrum = aq::compute_spectrum(ops);
    check_power_traces(ops, spectrum);
    const auto predicted = aq::predicted_dims(q, N, M);
    for (std::size_t k = 0; k < predicted.size(); ++k) {
      CHECK(aq::Integer(static_cast<unsigned long>(spectrum.entries[k].dim)) == predicted[k].second);
    }
    for (const auto& row : aq::verify_spectrum(ops, spectrum)) {
      CAPTURE(row.name);
      CHECK(row.pass);
    }
  }
}

TEST_CASE("dimensions on the named instances") {
  const auto s222 = aq::compute_spectrum(aq::build_operators(aq::build_poset(2, 2, 2)));
  CHECK(dims_of(s222) == std::vector<std::size_t>{1, 9, 9, 9, 1});
  const auto s321 = aq::compute_spectrum(aq::build_operators(aq::build_poset(3, 2, 1)));
  CHECK(dims_of(s321) == std::vector<std::size_t>{1, 8, 4, 8, 1});
}

TEST_CASE("primitive idempotents on (2,2,1)") {
  const auto ops = aq::build_operators(aq::build_poset(2, 2, 1));
  const auto spectrum = aq::compute_spectrum(ops);
  ExactMatrix sum(ops.size(), ops.size(), 2);
  std::vector<ExactMatrix> es;
  for (HalfIndex i : aq::half_indices(2)) es.push_back(aq::primitive_idempotent(ops, i));
  for (std::size_t a = 0; a < es.size(); ++a) {
    CHECK(es[a] * es[a] == es[a]);
    CHECK(es[a].trace() == ExactScalar::rational(aq::Rational(static_cast<unsigned long>(spectrum.entries[a].dim)), 2));
    CHECK(ops.A * es[a] == es[a] * spectrum.entries[a].theta);
    CHECK(ops.S * es[a] == es[es.size() - 1 - a] * ops.S);
    for (std::size_t b = 0; b < es.size(); ++b) {
      if (a != b) CHECK((es[a] * es[b]).is_zero());
    }
    sum += es[a];
  }
  CHECK(sum == ExactMatrix::identity(ops.size(), 2));
}

TEST_CASE("band profile") {
  for (auto [q, N, M] : {std::tuple{2, 2, 2}, {3, 2, 1}, {2, 1, 1}}) {
    const auto ops = aq::build_operators(aq::build_poset(q, N, M));
    const auto profile = aq::qpoly_band_profile(ops, aq::compute_spectrum(ops));
    CHECK(profile.pass);
    CHECK(profile.adjacent_iff_nonzero);
    CHECK(profile.tridiagonal_integers_first);
    CHECK(profile.tridiagonal_halves_first);
    for (HalfIndex i : profile.indices) {
      for (HalfIndex j : profile.indices) {
        if (i == j) continue;
        CHECK(profile.at(i, j) == (std::abs(i.twice - j.twice) == 2));
      }
    }
    // natural order is not block tridiagonal once there are half indices
    if (N >= 2) CHECK_FALSE(aq::is_block_tridiagonal(profile, profile.indices));
  }
}

TEST_CASE("band ordering on (2,2,2)") {
  const auto ops = aq::build_operators(aq::build_poset(2, 2, 2));
  const auto profile = aq::qpoly_band_profile(ops, aq::compute_spectrum(ops));
  std::vector<std::string> order;
  for (HalfIndex i : profile.ordering_integers_first) order.push_back(i.str());
  CHECK(order == std::vector<std::string>{"0", "1", "2", "1/2", "3/2"});
}
