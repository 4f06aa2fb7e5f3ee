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

#include "aq/operators.hpp"

using aq::ExactMatrix;
using aq::ExactScalar;

namespace {

ExactMatrix from_ints(const std::vector<std::vector<int>>& rows, int q) {
  ExactMatrix m(rows.size(), rows[0].size(), q);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = ExactScalar::rational(rows[r][c], q);
  }
  return m;
}

}  // namespace

TEST_CASE("adjacency of the smallest instance") {
  const auto ops = aq::build_operators(aq::build_poset(2, 1, 1));
  CHECK(ops.A == from_ints({{0, 1, 1}, {1, 0, 0}, {1, 0, 0}}, 2));
  CHECK(ops.R == from_ints({{0, 0, 0}, {1, 0, 0}, {1, 0, 0}}, 2));
}

TEST_CASE("diagonal operators on (2,2,2)") {
  const auto p = aq::build_poset(2, 2, 2);
  const auto ops = aq::build_operators(p);
  ExactMatrix sum(p.size(), p.size(), 2);
  const int traces[] = {1, 12, 16};
  for (int i = 0; i <= 2; ++i) {
    const auto& e = ops.Estar[static_cast<std::size_t>(i)];
    CHECK(e.trace() == ExactScalar::rational(traces[i], 2));
    CHECK(e * e == e);
    sum += e;
  }
  CHECK(sum == ExactMatrix::identity(p.size(), 2));
  CHECK(ops.Estar[0](0, 0) == ExactScalar::one(2));
  CHECK(ops.Estar[0].nonzeros() == 1);

  for (std::size_t v = 0; v < p.size(); ++v) {
    const int i = p.rank(v);
    CHECK(ops.Astar(v, v) == ExactScalar::rational(aq::Rational(1, 1 << i), 2));
    CHECK(ops.S(v, v) == ExactScalar::rational(i % 2 ? -1 : 1, 2));
  }
  CHECK(ops.S * ops.S == ExactMatrix::identity(p.size(), 2));
  CHECK((ops.S * ops.A + ops.A * ops.S).is_zero());
}

TEST_CASE("nilpotence and block placement") {
  const auto ops = aq::build_operators(aq::build_poset(3, 2, 1));
  ExactMatrix r = ops.R;
  ExactMatrix l = ops.L;
  for (int k = 0; k < 2; ++k) {
    CHECK_FALSE(r.is_zero());
    CHECK_FALSE(l.is_zero());
    r = ops.R * r;
    l = ops.L * l;
  }
  CHECK(r.is_zero());
  CHECK(l.is_zero());
  ExactMatrix blocks(ops.size(), ops.size(), 3);
  for (int i = 0; i < 2; ++i) blocks += ops.Estar[static_cast<std::size_t>(i) + 1] * ops.A * ops.Estar[static_cast<std::size_t>(i)];
  CHECK(blocks == ops.R);
  CHECK(ops.Lprime == ops.Astar * ops.L);
}

TEST_CASE("all relations hold on the default instances") {
  for (auto [q, N, M] : {std::tuple{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {3, 2, 1}, {3, 2, 2}}) {
    CAPTURE(q);
    CAPTURE(N);
    CAPTURE(M);
    const auto report = aq::verify_relations(aq::build_poset(q, N, M));
    for (const auto& row : report.rows) {
      CAPTURE(row.name);
      CHECK(row.pass);
    }
    CHECK(report.pass);
    CHECK(report.rows.size() >= 20);
  }
}

TEST_CASE("a perturbed adjacency entry is caught and named") {
  auto ops = aq::build_operators(aq::build_poset(2, 2, 2));
  ops.A(1, 0) += ExactScalar::one(2);
  const auto report = aq::verify_relations(ops);
  CHECK_FALSE(report.pass);
  REQUIRE(report.find("raising_from_adjacency") != nullptr);
  CHECK_FALSE(report.find("raising_from_adjacency")->pass);
  REQUIRE(report.find("tridiagonal_first") != nullptr);
  CHECK_FALSE(report.find("tridiagonal_first")->pass);
  CHECK(report.find("sign_involution")->pass);
}

TEST_CASE("a perturbed raising entry breaks the commutation relations") {
  auto ops = aq::build_operators(aq::build_poset(3, 2, 1));
  // an entry pointing down a rank
  ops.R(0, 5) += ExactScalar::one(3);
  const auto report = aq::verify_relations(ops);
  CHECK_FALSE(report.pass);
  CHECK_FALSE(report.find("raise_dual_commutation")->pass);
}

TEST_CASE("beta") {
  CHECK(aq::beta(2) == ExactScalar::rational(aq::Rational(5, 2), 2));
  CHECK(aq::beta(3) == ExactScalar::rational(aq::Rational(10, 3), 3));
}
