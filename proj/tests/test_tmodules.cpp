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

#include <map>

#include "aq/errors.hpp"
#include "aq/tmodules.hpp"

using aq::ExactMatrix;
using aq::ExactScalar;
using aq::Rational;

namespace {

using ClassCounts = std::map<std::pair<int, int>, std::size_t>;

ClassCounts witness_counts(const aq::Decomposition& dec) {
  ClassCounts out;
  for (const auto& w : dec.witnesses) ++out[{w.r, w.d}];
  return out;
}

ExactMatrix stack(const std::vector<ExactMatrix>& parts) {
  std::size_t rows = 0;
  for (const auto& p : parts) rows += p.rows();
  ExactMatrix out(rows, parts[0].cols(), parts[0].base());
  std::size_t at = 0;
  for (const auto& p : parts) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      for (std::size_t c = 0; c < p.cols(); ++c) out(at + r, c) = p(r, c);
    }
    at += p.rows();
  }
  return out;
}

// dim of {v in E*_r V : L v = 0, R^k v = 0}, from full-size matrices.
std::size_t lowest_kernel_dim(const aq::OperatorSet& ops, int r, int k) {
  const std::size_t n = ops.size();
  ExactMatrix outside = ExactMatrix::identity(n, ops.q) - ops.Estar[static_cast<std::size_t>(r)];
  ExactMatrix rk = ExactMatrix::identity(n, ops.q);
  for (int i = 0; i < k; ++i) rk = ops.R * rk;
  return n - aq::rank(stack({outside, ops.L, rk}));
}

ClassCounts nested_kernel_counts(const aq::OperatorSet& ops) {
  ClassCounts out;
  for (int r = 0; r <= ops.N; ++r) {
    for (int d = 0; d <= ops.N - r; ++d) {
      const std::size_t m = lowest_kernel_dim(ops, r, d + 1) - lowest_kernel_dim(ops, r, d);
      if (m > 0) out[{r, d}] = m;
    }
  }
  return out;
}

ClassCounts predicted_counts(int q, int N, int M) {
  ClassCounts out;
  for (const auto& e : aq::psi_set(q, N, M)) {
    if (sgn(e.predicted_mult) != 0) out[{e.r, e.d}] = e.predicted_mult.get_num().get_ui();
  }
  return out;
}

ExactMatrix from_ints(const std::vector<std::vector<int>>& rows, int q) {
  ExactMatrix m(rows.size(), rows[0].size(), q);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = ExactScalar::rational(rows[r][c], q);
  }
  return m;
}

const aq::ModuleWitness& first_of(const aq::Decomposition& dec, int r, int d) {
  for (const auto& w : dec.witnesses) {
    if (w.r == r && w.d == d) return w;
  }
  throw std::logic_error("class missing");
}

}  // namespace

TEST_CASE("admissible classes and multiplicities") {
  CHECK(predicted_counts(2, 2, 2) == ClassCounts{{{0, 2}, 1}, {{1, 1}, 9}, {{1, 0}, 2}, {{2, 0}, 6}});
  CHECK(predicted_counts(3, 2, 1) == ClassCounts{{{0, 2}, 1}, {{1, 1}, 8}, {{1, 0}, 3}});
  CHECK(predicted_counts(2, 1, 1) == ClassCounts{{{0, 1}, 1}, {{1, 0}, 1}});
  CHECK_FALSE(aq::in_psi(2, 0, 2, 1));
  CHECK(aq::predicted_mult(2, 0, 3, 2, 1) == 0);
  for (int N = 1; N <= 5; ++N) {
    for (int M = 1; M <= 5; ++M) CHECK(aq::in_psi(0, N, N, M));
  }
}

TEST_CASE("class sums") {
  for (auto [q, N, M] : {std::tuple{2, 2, 2}, {3, 2, 1}, {2, 3, 2}, {2, 4, 3}, {5, 3, 4}, {3, 5, 2}}) {
    const auto report = aq::verify_psisum(q, N, M);
    CHECK(report.pass);
  }
  const auto report = aq::verify_psisum(2, 2, 2);
  bool found = false;
  for (const auto& row : report.rows) {
    if (row.r == 1 && row.d == 0) {
      found = true;
      CHECK(row.lhs == 3);
      CHECK(row.rhs == 3);
    }
    if (row.r + row.d == 2) CHECK(row.lhs == aq::mu(row.r, 2, 2, 2));
  }
  CHECK(found);
}

TEST_CASE("xi scalars") {
  CHECK(aq::xi(1, 0, 2, 2, 2, 2) == 12);
  CHECK(aq::xi(2, 0, 2, 2, 2, 2) == 24);
  CHECK(aq::xi_prime(1, 0, 2, 2, 2, 2) == 12);
  CHECK(aq::xi_prime(2, 0, 2, 2, 2, 2) == 12);
  CHECK_THROWS_AS(aq::xi(0, 0, 2, 2, 2, 2), std::out_of_range);
  CHECK_THROWS_AS(aq::xi_prime(3, 0, 2, 2, 2, 2), std::out_of_range);
  for (auto [q, N, M] : {std::tuple{2, 3, 2}, {3, 2, 1}, {5, 3, 3}}) {
    for (const auto& e : aq::psi_set(q, N, M)) {
      for (int i = 1; i <= e.d; ++i) {
        const Rational qp = aq::Rational(aq::int_pow(q, e.r + i - 1));
        CHECK(aq::xi(i, e.r, e.d, q, N, M) == qp * aq::xi_prime(i, e.r, e.d, q, N, M));
        CHECK(sgn(aq::xi(i, e.r, e.d, q, N, M)) != 0);
      }
    }
  }
}

TEST_CASE("module windows add up to the eigenspace dimensions") {
  for (auto [q, N, M] : {std::tuple{2, 2, 2}, {3, 2, 1}, {2, 3, 2}, {2, 4, 3}, {5, 3, 4}, {3, 5, 2}, {2, 6, 1}}) {
    CAPTURE(q);
    CAPTURE(N);
    CAPTURE(M);
    CHECK(aq::dims_from_psi(q, N, M) == aq::predicted_dims(q, N, M));
  }
}

TEST_CASE("decomposition counts agree with nested kernels") {
  for (auto [q, N, M] : {std::tuple{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {3, 2, 1}}) {
    CAPTURE(q);
    CAPTURE(N);
    CAPTURE(M);
    const auto ops = aq::build_operators(aq::build_poset(q, N, M));
    const auto dec = aq::decompose(ops);
    CHECK(witness_counts(dec) == nested_kernel_counts(ops));
    CHECK(witness_counts(dec) == predicted_counts(q, N, M));
    CHECK(dec.basis_rank == ops.size());
  }
}

TEST_CASE("witnesses on (2,2,2)") {
  const auto ops = aq::build_operators(aq::build_poset(2, 2, 2));
  const auto dec = aq::decompose(ops);
  CHECK(dec.witnesses.size() == 18);
  std::size_t vectors = 0;
  for (const auto& w : dec.witnesses) {
    vectors += w.basis.size();
    for (const auto& row : aq::verify_module(ops, w)) {
      CAPTURE(row.name);
      CHECK(row.pass);
    }
  }
  CHECK(vectors == 29);

  ExactMatrix m;
  REQUIRE(aq::module_matrix(ops, first_of(dec, 0, 2), m));
  CHECK(m == from_ints({{0, 12, 0}, {1, 0, 24}, {0, 1, 0}}, 2));
  CHECK(m == aq::expected_module_matrix(0, 2, 2, 2, 2));
  // x^3 - 36x
  const auto p = aq::tridiagonal_charpoly(m);
  REQUIRE(p.size() == 4);
  CHECK(p[0].is_zero());
  CHECK(p[1] == ExactScalar::rational(-36, 2));
  CHECK(p[2].is_zero());
  CHECK(p[3] == ExactScalar::one(2));
  const auto roots = aq::poly_from_roots(
      {ExactScalar::rational(6, 2), ExactScalar(2), ExactScalar::rational(-6, 2)}, 2);
  CHECK(p == roots);

  REQUIRE(aq::module_matrix(ops, first_of(dec, 2, 0), m));
  CHECK(m == ExactMatrix(1, 1, 2));

  for (const auto& row : aq::verify_decomposition(ops, dec, aq::compute_spectrum(ops))) {
    CAPTURE(row.name);
    CHECK(row.pass);
  }
}

TEST_CASE("irrational module spectrum on (3,2,1)") {
  const auto ops = aq::build_operators(aq::build_poset(3, 2, 1));
  const auto dec = aq::decompose(ops);
  CHECK(dec.witnesses.size() == 12);
  ExactMatrix m;
  REQUIRE(aq::module_matrix(ops, first_of(dec, 1, 1), m));
  const ExactScalar t_half = aq::theta(3, 2, 1, aq::HalfIndex{1});
  CHECK(t_half == ExactScalar::rational(3, 3));
  CHECK(aq::tridiagonal_charpoly(m) == aq::poly_from_roots({t_half, -t_half}, 3));
  for (const auto& w : dec.witnesses) CHECK(aq::all_pass(aq::verify_module(ops, w)));
}

TEST_CASE("leonard profiles") {
  {
    const auto ops = aq::build_operators(aq::build_poset(2, 2, 2));
    const auto dec = aq::decompose(ops);
    const auto& w = first_of(dec, 0, 2);
    const auto p = aq::leonard_profile(ops, w);
    CHECK(p.h == ExactScalar::rational(8, 2));
    CHECK(p.h_star == ExactScalar::one(2));
    CHECK(p.s == ExactScalar::rational(Rational(-1, 8), 2));
    CHECK(p.theta0 == ExactScalar::rational(6, 2));
    CHECK(p.theta0_star == ExactScalar::one(2));
    CHECK(p.bipartite);
    for (const auto& v : dec.witnesses) {
      const auto profile = aq::leonard_profile(ops, v);
      CHECK(profile.bipartite);
      CHECK(aq::all_pass(aq::verify_leonard(ops, v, profile)));
    }
  }
  {
    const auto ops = aq::build_operators(aq::build_poset(3, 2, 1));
    const auto dec = aq::decompose(ops);
    const auto p = aq::leonard_profile(ops, first_of(dec, 1, 0));
    CHECK(p.d == 0);
    CHECK(p.t.twice == 2);
    CHECK(p.h == ExactScalar(0, Rational(3, 2), 3));
    CHECK(p.theta0.is_zero());
    for (const auto& v : dec.witnesses) CHECK(aq::all_pass(aq::verify_leonard(ops, v, aq::leonard_profile(ops, v))));
  }
}

TEST_CASE("orthogonal post-pass") {
  for (auto [q, N, M] : {std::tuple{2, 2, 2}, {3, 2, 1}}) {
    const auto ops = aq::build_operators(aq::build_poset(q, N, M));
    auto dec = aq::decompose(ops);
    aq::orthogonalize(ops, dec);
    CHECK(aq::is_orthogonal(dec));
    for (const auto& w : dec.witnesses) CHECK(aq::all_pass(aq::verify_module(ops, w)));
  }
}

TEST_CASE("damaged witnesses and operators are caught") {
  const auto ops = aq::build_operators(aq::build_poset(2, 2, 2));
  const auto dec = aq::decompose(ops);
  auto w = first_of(dec, 0, 2);
  w.basis[1] *= ExactScalar::rational(2, 2);
  const auto rows = aq::verify_module(ops, w);
  CHECK_FALSE(aq::all_pass(rows));
  ExactMatrix m;
  CHECK((!aq::module_matrix(ops, w, m) || !(m == aq::expected_module_matrix(0, 2, 2, 2, 2))));

  auto broken = ops;
  // lowering that kills one extra vector changes the lowest-weight spaces
  for (std::size_t c = 0; c < broken.L.cols(); ++c) broken.L(0, c) = ExactScalar(2);
  CHECK_THROWS_AS(aq::decompose(broken), aq::StructuralError);
}
