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

#include "aq/exact_matrix.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "aq/errors.hpp"

namespace aq {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, int q)
    : rows_(rows), cols_(cols), q_(q), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n, int q) {
  ExactMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = ExactScalar::one(q);
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<ExactScalar>& d, int q) {
  ExactMatrix m(d.size(), d.size(), q);
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::unit_column(std::size_t n, std::size_t i, int q) {
  ExactMatrix m(n, 1, q);
  m(i, 0) = ExactScalar::one(q);
  return m;
}

ExactMatrix ExactMatrix::hcat(const std::vector<ExactMatrix>& blocks, std::size_t rows, int q) {
  std::size_t cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hcat row count mismatch");
    cols += b.cols();
  }
  ExactMatrix m(rows, cols, q);
  std::size_t c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) m(r, c0 + c) = b(r, c);
    }
    c0 += b.cols();
  }
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::size_t ExactMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& x : data_) n += x.is_zero() ? 0 : 1;
  return n;
}

bool ExactMatrix::is_rational() const {
  for (const auto& x : data_) {
    if (!x.is_rational()) return false;
  }
  return true;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, q_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

ExactMatrix ExactMatrix::col(std::size_t c) const { return block(0, rows_, c, 1); }

void ExactMatrix::set_col(std::size_t c, const ExactMatrix& v) {
  if (v.rows() != rows_ || v.cols() != 1) throw std::invalid_argument("set_col shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v(r, 0);
}

ExactMatrix ExactMatrix::block(std::size_t r0, std::size_t nr, std::size_t c0, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw std::out_of_range("block out of range");
  ExactMatrix b(nr, nc, q_);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

ExactScalar ExactMatrix::trace() const {
  ExactScalar t(q_);
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

void ExactMatrix::check_same_shape(const ExactMatrix& o) const {
  if (q_ != o.q_) throw BaseMismatch("matrices over different bases");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  check_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] += o.data_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  check_same_shape(o);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    if (!o.data_[k].is_zero()) data_[k] -= o.data_[k];
  }
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const ExactScalar& s) {
  for (auto& x : data_) {
    if (!x.is_zero()) x *= s;
  }
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.q_ != b.q_) throw BaseMismatch("matrices over different bases");
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix c(a.rows_, b.cols_, a.q_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    ExactScalar* out = &c.data_[i * c.cols_];
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const ExactScalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      const ExactScalar* in = &b.data_[k * b.cols_];
      for (std::size_t j = 0; j < b.cols_; ++j) fma(out[j], aik, in[j]);
    }
  }
  return c;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  if (a.q_ != b.q_) throw BaseMismatch("matrices over different bases");
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(a.data_[k] == b.data_[k])) return false;
  }
  return true;
}

ExactRref rref(ExactMatrix m) {
  ExactRref out{std::move(m), {}};
  ExactMatrix& a = out.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> support;  // nonzero columns of the pivot row
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(row, j));
    }
    const ExactScalar inv = ext_inv(a(row, c));
    support.clear();
    for (std::size_t j = c; j < cols; ++j) {
      if (a(row, j).is_zero()) continue;
      a(row, j) *= inv;
      support.push_back(j);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || a(i, c).is_zero()) continue;
      const ExactScalar f = -a(i, c);
      for (std::size_t j : support) fma(a(i, j), f, a(row, j));
    }
    out.pivots.push_back(c);
    ++row;
  }
  return out;
}

std::size_t rank(const ExactMatrix& m) {
  if (m.rows() > m.cols()) return rref(m.transpose()).pivots.size();
  return rref(m).pivots.size();
}

ExactMatrix kernel_basis(const ExactMatrix& m) {
  const ExactRref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : r.pivots) is_pivot[c] = true;

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  ExactMatrix basis(n, free_cols.size(), m.base());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = ExactScalar::one(m.base());
    for (std::size_t pr = 0; pr < r.pivots.size(); ++pr) {
      const ExactScalar& e = r.reduced(pr, f);
      if (!e.is_zero()) basis(r.pivots[pr], k) = -e;
    }
  }
  return basis;
}

}  // namespace aq
