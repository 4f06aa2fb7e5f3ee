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

#include "aq/operators.hpp"

#include <initializer_list>
#include <stdexcept>

namespace aq {
namespace {

ExactScalar rat(const Rational& r, int q) { return ExactScalar::rational(r, q); }

Rational q_power(int q, int e) {
  if (e >= 0) return Rational(int_pow(q, e));
  return Rational(1) / Rational(int_pow(q, -e));
}

// One term c * X_1 X_2 ... X_k of a noncommutative polynomial; an empty
// word is the identity.
struct Term {
  ExactScalar coeff;
  std::vector<const ExactMatrix*> word;
};

// Sum of terms. Words are evaluated right to left so every left factor is
// one of the (sparse) generators.
ExactMatrix evaluate(const std::vector<Term>& terms, std::size_t n, int q) {
  ExactMatrix sum(n, n, q);
  for (const Term& t : terms) {
    ExactMatrix value;
    if (t.word.empty()) {
      value = ExactMatrix::identity(n, q);
    } else {
      value = *t.word.back();
      for (std::size_t k = t.word.size() - 1; k-- > 0;) value = *t.word[k] * value;
    }
    sum += value * t.coeff;
  }
  return sum;
}

class Checker {
 public:
  Checker(std::size_t n, int q) : n_(n), q_(q) {}

  void expect_zero(std::string name, std::string identity, const std::vector<Term>& terms) {
    int degree = 0;
    for (const Term& t : terms) degree = std::max(degree, static_cast<int>(t.word.size()));
    push(std::move(name), std::move(identity), degree, evaluate(terms, n_, q_).is_zero());
  }

  void push(std::string name, std::string identity, int degree, bool pass) {
    report_.rows.push_back({std::move(name), std::move(identity), degree, pass});
  }

  RelationReport finish() {
    report_.pass = true;
    for (const auto& row : report_.rows) report_.pass = report_.pass && row.pass;
    return std::move(report_);
  }

 private:
  std::size_t n_;
  int q_;
  RelationReport report_;
};

ExactMatrix power(const ExactMatrix& m, int k) {
  ExactMatrix r = ExactMatrix::identity(m.rows(), m.base());
  for (int i = 0; i < k; ++i) r = m * r;
  return r;
}

}  // namespace

ExactMatrix matrix_Estar(const PosetInstance& p, int i) {
  if (i < 0 || i > p.N) throw std::out_of_range("E*_i index out of range");
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t v = p.rank_begin(i); v < p.rank_end(i); ++v) m(v, v) = ExactScalar::one(p.q);
  return m;
}

ExactMatrix matrix_Astar(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t v = 0; v < p.size(); ++v) m(v, v) = rat(q_power(p.q, -p.rank(v)), p.q);
  return m;
}

ExactMatrix matrix_S(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t v = 0; v < p.size(); ++v) {
    m(v, v) = rat(Rational(p.rank(v) % 2 == 0 ? 1 : -1), p.q);
  }
  return m;
}

ExactMatrix matrix_R(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t y = 0; y < p.size(); ++y) {
    for (std::size_t z : p.covers_down[y]) m(y, z) = ExactScalar::one(p.q);
  }
  return m;
}

ExactMatrix matrix_Lprime(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t y = 0; y < p.size(); ++y) {
    for (std::size_t z : p.covers_up[y]) m(y, z) = ExactScalar::one(p.q);
  }
  return m;
}

ExactMatrix matrix_L(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t y = 0; y < p.size(); ++y) {
    const ExactScalar w = rat(q_power(p.q, p.rank(y)), p.q);
    for (std::size_t z : p.covers_up[y]) m(y, z) = w;
  }
  return m;
}

ExactMatrix matrix_A(const PosetInstance& p) {
  ExactMatrix m(p.size(), p.size(), p.q);
  for (std::size_t y = 0; y < p.size(); ++y) {
    for (std::size_t z : p.covers_down[y]) m(y, z) = ExactScalar::one(p.q);
    const ExactScalar w = rat(q_power(p.q, p.rank(y)), p.q);
    for (std::size_t z : p.covers_up[y]) m(y, z) = w;
  }
  return m;
}

OperatorSet build_operators(const PosetInstance& p) {
  OperatorSet ops;
  ops.q = p.q;
  ops.N = p.N;
  ops.M = p.M;
  ops.rank_offsets = p.rank_offsets;
  for (int i = 0; i <= p.N; ++i) ops.Estar.push_back(matrix_Estar(p, i));
  ops.Astar = matrix_Astar(p);
  ops.S = matrix_S(p);
  ops.R = matrix_R(p);
  ops.Lprime = matrix_Lprime(p);
  ops.L = matrix_L(p);
  ops.A = matrix_A(p);
  return ops;
}

ExactScalar beta(int q) { return rat(Rational(q) + Rational(1, q), q); }

const RelationCheck* RelationReport::find(const std::string& name) const {
  for (const auto& row : rows) {
    if (row.name == name) return &row;
  }
  return nullptr;
}

RelationReport verify_relations(const PosetInstance& p) { return verify_relations(build_operators(p)); }

RelationReport verify_relations(const OperatorSet& ops) {
  const int q = ops.q;
  const int N = ops.N;
  const std::size_t n = ops.size();
  Checker check(n, q);

  const ExactMatrix* R = &ops.R;
  const ExactMatrix* Lp = &ops.Lprime;
  const ExactMatrix* L = &ops.L;
  const ExactMatrix* A = &ops.A;
  const ExactMatrix* As = &ops.Astar;
  const ExactMatrix* S = &ops.S;

  const auto c = [q](const Rational& r) { return ExactScalar::rational(r, q); };
  const ExactScalar one = c(1);
  const ExactScalar minus_one = c(-1);
  const ExactScalar qq = c(q);
  const ExactScalar q_inv = c(Rational(1, q));
  const ExactScalar q1 = c(q + 1);
  const Rational qNM = q_power(q, N + ops.M);
  const ExactScalar b = beta(q);
  const ExactScalar b1 = b + one;

  // raising / lowering against the dual matrix
  check.expect_zero("raise_dual_commutation", "R A* = q A* R",
                    {{one, {R, As}}, {-qq, {As, R}}});
  check.expect_zero("lower_dual_commutation", "L' A* = q^-1 A* L'",
                    {{one, {Lp, As}}, {-q_inv, {As, Lp}}});
  check.expect_zero("lower_cubic_first",
                    "L'^2 R - (q+1) L'RL' + q RL'^2 = -(q+1) q^(N+M) L'A*",
                    {{one, {Lp, Lp, R}}, {-q1, {Lp, R, Lp}}, {qq, {R, Lp, Lp}},
                     {c(Rational(q + 1) * qNM), {Lp, As}}});
  check.expect_zero("lower_cubic_second",
                    "L'R^2 - (q+1) RL'R + q R^2 L' = -(q+1) q^(N+M) A*R",
                    {{one, {Lp, R, R}}, {-q1, {R, Lp, R}}, {qq, {R, R, Lp}},
                     {c(Rational(q + 1) * qNM), {As, R}}});
  check.expect_zero("qlower_dual_commutation", "L A* = q^-1 A* L",
                    {{one, {L, As}}, {-q_inv, {As, L}}});
  check.expect_zero("down_up_first", "L^2 R - q(q+1) LRL + q^3 RL^2 = -q^(N+M) (q+1) L",
                    {{one, {L, L, R}}, {c(-q * (q + 1)), {L, R, L}}, {c(q * q * q), {R, L, L}},
                     {c(qNM * (q + 1)), {L}}});
  check.expect_zero("down_up_second", "LR^2 - q(q+1) RLR + q^3 R^2 L = -q^(N+M) (q+1) R",
                    {{one, {L, R, R}}, {c(-q * (q + 1)), {R, L, R}}, {c(q * q * q), {R, R, L}},
                     {c(qNM * (q + 1)), {R}}});

  // tridiagonal relations
  const ExactScalar td = c(q_power(q, N + ops.M - 2) * (q + 1) * (q + 1));
  check.expect_zero("tridiagonal_first",
                    "A^3 A* - (b+1) A^2 A* A + (b+1) A A* A^2 - A* A^3 = q^(N+M-2) (q+1)^2 (A A* - A* A)",
                    {{one, {A, A, A, As}}, {-b1, {A, A, As, A}}, {b1, {A, As, A, A}},
                     {minus_one, {As, A, A, A}}, {-td, {A, As}}, {td, {As, A}}});
  check.expect_zero("tridiagonal_second", "A*^2 A - b A* A A* + A A*^2 = 0",
                    {{one, {As, As, A}}, {-b, {As, A, As}}, {one, {A, As, As}}});
  check.expect_zero("tridiagonal_dual_cubic",
                    "A*^3 A - (b+1) A*^2 A A* + (b+1) A* A A*^2 - A A*^3 = 0",
                    {{one, {As, As, As, A}}, {-b1, {As, As, A, As}}, {b1, {As, A, As, As}},
                     {minus_one, {A, As, As, As}}});

  // the sign matrix
  check.expect_zero("sign_involution", "S^2 = I", {{one, {S, S}}, {minus_one, {}}});
  check.expect_zero("sign_dual_commute", "S A* = A* S", {{one, {S, As}}, {minus_one, {As, S}}});
  check.expect_zero("sign_anticommute_R", "S R = -R S", {{one, {S, R}}, {one, {R, S}}});
  check.expect_zero("sign_anticommute_Lprime", "S L' = -L' S", {{one, {S, Lp}}, {one, {Lp, S}}});
  check.expect_zero("sign_anticommute_L", "S L = -L S", {{one, {S, L}}, {one, {L, S}}});
  check.expect_zero("sign_anticommute_A", "S A = -A S", {{one, {S, A}}, {one, {A, S}}});

  check.expect_zero("lowering_factorization", "L' = A* L", {{one, {Lp}}, {minus_one, {As, L}}});
  check.expect_zero("adjacency_split", "A = R + L", {{one, {A}}, {minus_one, {R}}, {minus_one, {L}}});
  check.push("lowering_transpose", "L' = R^t", 1, ops.Lprime == ops.R.transpose());

  // subconstituent projections
  {
    bool orthogonal = true;
    ExactMatrix sum(n, n, q);
    ExactMatrix dual(n, n, q);
    for (int i = 0; i <= N; ++i) {
      const auto& Ei = ops.Estar[static_cast<std::size_t>(i)];
      sum += Ei;
      dual += Ei * c(q_power(q, -i));
      for (int j = 0; j <= N; ++j) {
        const ExactMatrix prod = Ei * ops.Estar[static_cast<std::size_t>(j)];
        orthogonal = orthogonal && (i == j ? prod == Ei : prod.is_zero());
      }
    }
    check.push("dual_idempotents_orthogonal", "E*_i E*_j = delta_ij E*_i", 2, orthogonal);
    check.push("dual_idempotents_resolve_identity", "sum_i E*_i = I", 1,
               sum == ExactMatrix::identity(n, q));
    check.push("dual_spectral_form", "A* = sum_i q^-i E*_i", 1, dual == ops.Astar);
  }
  {
    bool banded = true;
    ExactMatrix raise(n, n, q);
    ExactMatrix lower(n, n, q);
    for (int i = 0; i <= N; ++i) {
      for (int j = 0; j <= N; ++j) {
        const ExactMatrix block =
            ops.Estar[static_cast<std::size_t>(j)] * (ops.A * ops.Estar[static_cast<std::size_t>(i)]);
        if (j == i + 1) raise += block;
        if (j + 1 == i) lower += block;
        if (j != i + 1 && j + 1 != i) banded = banded && block.is_zero();
      }
    }
    check.push("adjacency_block_tridiagonal", "E*_j A E*_i = 0 unless |i-j| = 1", 3, banded);
    check.push("raising_from_adjacency", "R = sum_i E*_{i+1} A E*_i", 3, raise == ops.R);
    check.push("lowering_from_adjacency", "L = sum_i E*_{i-1} A E*_i", 3, lower == ops.L);
  }

  check.push("raising_nilpotent", "R^(N+1) = 0", N + 1, power(ops.R, N + 1).is_zero());
  check.push("qlowering_nilpotent", "L^(N+1) = 0", N + 1, power(ops.L, N + 1).is_zero());
  check.push("lowering_nilpotent", "L'^(N+1) = 0", N + 1, power(ops.Lprime, N + 1).is_zero());

  return check.finish();
}

}  // namespace aq
