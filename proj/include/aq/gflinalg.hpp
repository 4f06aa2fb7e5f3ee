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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "aq/qcomb.hpp"

namespace aq {

inline constexpr std::size_t kDefaultVertexCap = 100000;

bool is_prime(int q);

/// Dense matrix over the prime field F_q; every entry is kept in [0, q).
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(int q, std::size_t rows, std::size_t cols);
  // Entries are row-major and reduced mod q on the way in.
  GFMatrix(int q, std::size_t rows, std::size_t cols, const std::vector<int>& entries);

  int q() const { return q_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, int v);

  std::span<const int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  const std::vector<int>& entries() const { return data_; }

  // [top ; bottom]
  static GFMatrix vstack(const GFMatrix& top, const GFMatrix& bottom);
  // [left | right]
  static GFMatrix hcat(const GFMatrix& left, const GFMatrix& right);

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  int q_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

struct GFRref {
  GFMatrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

GFRref rref(const GFMatrix& m);

/// A subspace y of F_q^{N+M} with y ∩ h = 0, where h is spanned by the last
/// M coordinates. It is the row space of [U | T] with U (dim x N) in reduced
/// row echelon form of full rank and T (dim x M) arbitrary; this pair is the
/// unique canonical representative.
struct Vertex {
  int dim = 0;
  GFMatrix U;
  GFMatrix T;

  int q() const { return U.q(); }
  int N() const { return static_cast<int>(U.cols()); }
  int M() const { return static_cast<int>(T.cols()); }

  // dim x (N+M) generator matrix [U | T].
  GFMatrix generator() const { return GFMatrix::hcat(U, T); }

  // Row-major digits of U followed by those of T; defines the order
  // within a rank block.
  std::vector<int> digits() const;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

// q^{M i} binom(N, i)_q for i = 0..N.
std::vector<Integer> rank_sizes(int q, int N, int M);
Integer predicted_vertex_count(int q, int N, int M);

// All vertices ordered by dimension, then lexicographically by digits().
// Throws std::invalid_argument for non-prime q or N, M < 1, and
// CapacityError when the vertex count exceeds cap.
std::vector<Vertex> enumerate_vertices(int q, int N, int M,
                                       std::size_t cap = kDefaultVertexCap);

// Throw ParameterMismatch when (q, N, M) differ.
bool is_subspace_of(const Vertex& y, const Vertex& z);
bool covers(const Vertex& z, const Vertex& y);

}  // namespace aq
