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

#include <string>
#include <vector>

#include "aq/check.hpp"
#include "aq/operators.hpp"
#include "aq/spectral.hpp"

namespace aq {

// An isomorphism class (r, d) of irreducible T-modules: endpoint r,
// diameter d. t = (N - d)/2 offsets the module's eigenvalues into the
// global list.
struct PsiEntry {
  int r = 0;
  int d = 0;
  Rational predicted_mult;
  HalfIndex t;
};

// 0 <= r, d <= N, N - 2r <= d <= N - r, d <= N + M - 2r.
bool in_psi(int r, int d, int N, int M);
Rational predicted_mult(int r, int d, int q, int N, int M);
// Sorted by (r, d).
std::vector<PsiEntry> psi_set(int q, int N, int M);

struct PsiSumRow {
  int r = 0;
  int d = 0;
  Rational lhs;  // sum over l of mult(r - l, d + 2l)
  Rational rhs;  // mu_{2r+d-N} binom(2N-2r-d, N-r-d)_q
  bool pass = false;
};

struct PsiSumReport {
  std::vector<PsiSumRow> rows;
  bool pass = false;
};

PsiSumReport verify_psisum(int q, int N, int M);

// 1 <= i <= d, otherwise std::out_of_range.
Rational xi(int i, int r, int d, int q, int N, int M);
Rational xi_prime(int i, int r, int d, int q, int N, int M);

// dim E_i V as the sum of mult(r, d) over classes whose eigenvalue window
// {t, t+1, ..., t+d} contains i.
std::vector<std::pair<HalfIndex, Integer>> dims_from_psi(int q, int N, int M);

/// One irreducible submodule W of the standard module with its raising
/// basis: w_0 spans ker L on the endpoint block and w_i = R^i w_0.
struct ModuleWitness {
  int r = 0;
  int d = 0;
  std::vector<ExactMatrix> basis;  // n x 1 columns w_0 .. w_d

  const ExactMatrix& w0() const { return basis.front(); }
};

struct ObservedMult {
  int r = 0;
  int d = 0;
  std::size_t observed = 0;
  Rational predicted;
};

struct Decomposition {
  std::vector<ModuleWitness> witnesses;  // ordered by (r, d, stratum index)
  std::vector<ObservedMult> multiplicities;
  std::size_t basis_rank = 0;  // rank of all witness vectors together
};

// Splits V into irreducible modules. For each endpoint r the lowest-weight
// space K_r = ker L ∩ E*_r V is filtered by S_d = K_r ∩ ker R^{d+1}; the
// diameter-d stratum is S_d ∩ S_{d-1}^⊥, and each of its kernel basis
// vectors seeds one witness. Throws StructuralError if a stratum falls
// outside the admissible classes, a multiplicity disagrees with its
// prediction, or the witnesses do not span V.
Decomposition decompose(const OperatorSet& ops);

// Optional: Gram-Schmidt on the lowest-weight vectors of each (r, d)
// stratum, which makes the whole decomposition orthogonal.
void orthogonalize(const OperatorSet& ops, Decomposition& decomposition);
bool is_orthogonal(const Decomposition& decomposition);

// Matrix of A on the witness basis, read off from A w_i. Returns false if
// A w_i leaves span{w_{i-1}, w_{i+1}}.
bool module_matrix(const OperatorSet& ops, const ModuleWitness& w, ExactMatrix& out);

// Tridiagonal matrix with zero diagonal, ones below and xi_i(r, d) above.
ExactMatrix expected_module_matrix(int r, int d, int q, int N, int M);

// det(x I - m) for tridiagonal m; coefficients from x^0 upward.
std::vector<ExactScalar> tridiagonal_charpoly(const ExactMatrix& m);
// prod (x - root); coefficients from x^0 upward.
std::vector<ExactScalar> poly_from_roots(const std::vector<ExactScalar>& roots, int q);

std::vector<CheckRow> verify_module(const OperatorSet& ops, const ModuleWitness& w);

struct LeonardProfile {
  int d = 0;
  HalfIndex t;
  ExactScalar h;
  ExactScalar h_star;
  ExactScalar s;
  ExactScalar theta0;
  ExactScalar theta0_star;
  std::vector<ExactScalar> eigenvalue_sequence;       // theta_i(Phi), i = 0..d
  std::vector<ExactScalar> dual_eigenvalue_sequence;  // theta*_i(Phi)
  bool bipartite = false;
};

LeonardProfile leonard_profile(const OperatorSet& ops, const ModuleWitness& w);
std::vector<CheckRow> verify_leonard(const OperatorSet& ops, const ModuleWitness& w,
                                     const LeonardProfile& profile);

// Whole-decomposition invariants: multiplicities, completeness,
// eigenvalue bookkeeping against the spectrum, class separation,
// nonvanishing of xi and xi'.
std::vector<CheckRow> verify_decomposition(const OperatorSet& ops, const Decomposition& decomposition,
                                           const Spectrum& spectrum);

}  // namespace aq
