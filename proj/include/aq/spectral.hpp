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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "aq/check.hpp"
#include "aq/operators.hpp"

namespace aq {

/// An element of {0, 1/2, 1, ..., N}, stored as twice its value.
struct HalfIndex {
  int twice = 0;

  bool is_integer() const { return twice % 2 == 0; }
  // N - i
  HalfIndex reflected(int N) const { return {2 * N - twice}; }
  std::string str() const;

  friend auto operator<=>(const HalfIndex&, const HalfIndex&) = default;
};

// 0, 1/2, 1, ..., N (2N+1 entries).
std::vector<HalfIndex> half_indices(int N);

// theta_i = (q^{N-i} - q^i)/(q - 1) * q^{M/2}, exactly in Q(sqrt q).
ExactScalar theta(int q, int N, int M, HalfIndex i);
std::vector<std::pair<HalfIndex, ExactScalar>> eigenvalues(int q, int N, int M);

// Eigenspace dimensions predicted from the mu_r sums; entries for i > N/2
// come from the symmetry dim E_i V = dim E_{N-i} V.
std::vector<std::pair<HalfIndex, Integer>> predicted_dims(int q, int N, int M);

// Columns: exact basis of ker(A - theta_i I).
ExactMatrix eigenspace_basis(const OperatorSet& ops, HalfIndex i);

struct SpectrumEntry {
  HalfIndex index;
  ExactScalar theta;
  std::size_t dim = 0;
  ExactMatrix eigenbasis;
};

struct Spectrum {
  int q = 2;
  int N = 1;
  int M = 1;
  std::vector<SpectrumEntry> entries;  // in half_indices order

  const SpectrumEntry& at(HalfIndex i) const { return entries[static_cast<std::size_t>(i.twice)]; }
  std::vector<ExactScalar> thetas() const;
};

Spectrum compute_spectrum(const OperatorSet& ops);

// prod_{j != i} (A - theta_j I)/(theta_i - theta_j) applied to y, one sparse
// product per factor.
ExactMatrix apply_idempotent(const OperatorSet& ops, HalfIndex i, ExactMatrix y);
ExactMatrix primitive_idempotent(const OperatorSet& ops, HalfIndex i);

// Checks on the computed spectrum and on the primitive idempotents:
// distinctness and antisymmetry of the eigenvalues, kernel dimensions
// against predicted_dims, completeness, minimal polynomial, and the
// idempotent identities (idempotence, orthogonality, resolution of I,
// spectral decomposition, trace, column space, sign conjugation).
std::vector<CheckRow> verify_spectrum(const OperatorSet& ops, const Spectrum& spectrum);

struct BandProfile {
  std::vector<HalfIndex> indices;           // half_indices order
  std::vector<std::vector<bool>> nonzero;   // [a][b]: E_{indices[a]} A* E_{indices[b]} != 0
  bool adjacent_iff_nonzero = false;        // distinct i, j: nonzero <=> |i-j| = 1
  std::vector<HalfIndex> ordering_integers_first;
  std::vector<HalfIndex> ordering_halves_first;
  bool tridiagonal_integers_first = false;
  bool tridiagonal_halves_first = false;
  bool dual_generates_diagonal_algebra = false;
  bool pass = false;

  bool at(HalfIndex i, HalfIndex j) const {
    return nonzero[static_cast<std::size_t>(i.twice)][static_cast<std::size_t>(j.twice)];
  }
};

BandProfile qpoly_band_profile(const OperatorSet& ops, const Spectrum& spectrum);

// Whether every pair more than one step apart in `order` has
// E_i A* E_j = 0.
bool is_block_tridiagonal(const BandProfile& profile, const std::vector<HalfIndex>& order);

}  // namespace aq
