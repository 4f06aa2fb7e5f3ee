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
#include <vector>

#include "aq/exact_scalar.hpp"

namespace aq {

/// Dense matrix over Q(sqrt q), row-major. Zero entries are stored as
/// unbound zeros and are skipped by products, so multiplying a sparse
/// left factor into a dense right factor costs nnz(left) * cols(right).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, int q);

  static ExactMatrix identity(std::size_t n, int q);
  static ExactMatrix diagonal(const std::vector<ExactScalar>& d, int q);
  // Column i of an n x n identity.
  static ExactMatrix unit_column(std::size_t n, std::size_t i, int q);
  // [m_0 | m_1 | ...]; all blocks need the same row count.
  static ExactMatrix hcat(const std::vector<ExactMatrix>& blocks, std::size_t rows, int q);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  int base() const { return q_; }

  ExactScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const ExactScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  std::size_t nonzeros() const;
  bool is_rational() const;

  ExactMatrix transpose() const;
  ExactMatrix col(std::size_t c) const;
  void set_col(std::size_t c, const ExactMatrix& v);
  // Rows [r0, r0+nr) and columns [c0, c0+nc).
  ExactMatrix block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const;
  ExactScalar trace() const;

  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  ExactMatrix& operator*=(const ExactScalar& s);

  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(ExactMatrix a, const ExactScalar& s) { return a *= s; }
  friend ExactMatrix operator*(const ExactScalar& s, ExactMatrix a) { return a *= s; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  void check_same_shape(const ExactMatrix& o) const;

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  int q_ = 2;
  std::vector<ExactScalar> data_;
};

struct ExactRref {
  ExactMatrix reduced;
  std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry at or below the current row.
ExactRref rref(ExactMatrix m);
std::size_t rank(const ExactMatrix& m);

// Columns form a basis of {x : m x = 0}, one per free column of rref(m)
// in ascending order, with a 1 in that free coordinate.
ExactMatrix kernel_basis(const ExactMatrix& m);

}  // namespace aq
