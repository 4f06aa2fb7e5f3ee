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

#include "aq/gflinalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

#include "aq/errors.hpp"

namespace aq {
namespace {

int mod(long long v, int q) {
  const long long r = v % q;
  return static_cast<int>(r < 0 ? r + q : r);
}

int inverse_mod(int a, int q) {
  // q is prime: a^(q-2)
  long long result = 1;
  long long base = a;
  for (int e = q - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % q;
    base = base * base % q;
  }
  return static_cast<int>(result);
}

void check_same_params(const Vertex& y, const Vertex& z) {
  if (y.q() != z.q() || y.N() != z.N() || y.M() != z.M()) {
    throw ParameterMismatch("vertices come from different (q,N,M) instances");
  }
}

// Advances a base-q odometer; false after the last state.
bool advance(std::vector<int>& digits, int q) {
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    if (++*it < q) return true;
    *it = 0;
  }
  return false;
}

// Strictly increasing index sets of size k from [0, n), in lex order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t j = k; j-- > 0;) {
    if (idx[j] < n - k + j) {
      ++idx[j];
      for (std::size_t l = j + 1; l < k; ++l) idx[l] = idx[l - 1] + 1;
      return true;
    }
  }
  return false;
}

void append_rank_block(int q, int N, int M, int dim, std::vector<Vertex>& out) {
  const auto n = static_cast<std::size_t>(N);
  const auto k = static_cast<std::size_t>(dim);
  std::vector<Vertex> block;

  std::vector<std::size_t> pivots(k);
  for (std::size_t j = 0; j < k; ++j) pivots[j] = j;
  do {
    // free slots of the echelon form: right of the row's pivot, not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = pivots[r] + 1; c < n; ++c) {
        if (!std::binary_search(pivots.begin(), pivots.end(), c)) slots.emplace_back(r, c);
      }
    }
    std::vector<int> u_fill(slots.size(), 0);
    do {
      GFMatrix U(q, k, n);
      for (std::size_t r = 0; r < k; ++r) U.set(r, pivots[r], 1);
      for (std::size_t s = 0; s < slots.size(); ++s) U.set(slots[s].first, slots[s].second, u_fill[s]);

      std::vector<int> t_fill(k * static_cast<std::size_t>(M), 0);
      do {
        block.push_back(Vertex{dim, U, GFMatrix(q, k, static_cast<std::size_t>(M), t_fill)});
      } while (advance(t_fill, q));
    } while (advance(u_fill, q));
  } while (k > 0 && next_combination(pivots, n));

  std::sort(block.begin(), block.end(),
            [](const Vertex& a, const Vertex& b) { return a.digits() < b.digits(); });
  std::move(block.begin(), block.end(), std::back_inserter(out));
}

}  // namespace

bool is_prime(int q) {
  if (q < 2) return false;
  for (int d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

GFMatrix::GFMatrix(int q, std::size_t rows, std::size_t cols)
    : q_(q), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GFMatrix::GFMatrix(int q, std::size_t rows, std::size_t cols, const std::vector<int>& entries)
    : q_(q), rows_(rows), cols_(cols), data_(entries) {
  if (data_.size() != rows * cols) throw std::invalid_argument("GFMatrix entry count mismatch");
  for (int& v : data_) v = mod(v, q);
}

void GFMatrix::set(std::size_t r, std::size_t c, int v) { data_[r * cols_ + c] = mod(v, q_); }

GFMatrix GFMatrix::vstack(const GFMatrix& top, const GFMatrix& bottom) {
  if (top.q_ != bottom.q_ || top.cols_ != bottom.cols_) {
    throw std::invalid_argument("vstack shape mismatch");
  }
  GFMatrix m(top.q_, top.rows_ + bottom.rows_, top.cols_);
  std::copy(top.data_.begin(), top.data_.end(), m.data_.begin());
  std::copy(bottom.data_.begin(), bottom.data_.end(),
            m.data_.begin() + static_cast<std::ptrdiff_t>(top.data_.size()));
  return m;
}

GFMatrix GFMatrix::hcat(const GFMatrix& left, const GFMatrix& right) {
  if (left.q_ != right.q_ || left.rows_ != right.rows_) {
    throw std::invalid_argument("hcat shape mismatch");
  }
  GFMatrix m(left.q_, left.rows_, left.cols_ + right.cols_);
  for (std::size_t r = 0; r < left.rows_; ++r) {
    for (std::size_t c = 0; c < left.cols_; ++c) m.set(r, c, left(r, c));
    for (std::size_t c = 0; c < right.cols_; ++c) m.set(r, left.cols_ + c, right(r, c));
  }
  return m;
}

GFRref rref(const GFMatrix& m) {
  GFRref out{m, {}, 0};
  GFMatrix& a = out.reduced;
  const int q = a.q();
  std::size_t row = 0;
  for (std::size_t c = 0; c < a.cols() && row < a.rows(); ++c) {
    std::size_t p = row;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) {
        const int t = a(p, j);
        a.set(p, j, a(row, j));
        a.set(row, j, t);
      }
    }
    const int inv = inverse_mod(a(row, c), q);
    for (std::size_t j = 0; j < a.cols(); ++j) a.set(row, j, static_cast<long long>(a(row, j)) * inv % q);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, c) == 0) continue;
      const int f = a(i, c);
      for (std::size_t j = 0; j < a.cols(); ++j) {
        a.set(i, j, mod(a(i, j) - static_cast<long long>(f) * a(row, j), q));
      }
    }
    out.pivots.push_back(c);
    ++row;
  }
  out.rank = row;
  return out;
}

std::vector<int> Vertex::digits() const {
  std::vector<int> d(U.entries());
  d.insert(d.end(), T.entries().begin(), T.entries().end());
  return d;
}

std::vector<Integer> rank_sizes(int q, int N, int M) {
  std::vector<Integer> sizes;
  for (int i = 0; i <= N; ++i) {
    sizes.push_back(int_pow(q, M * i) * q_binomial(N, i, q).get_num());
  }
  return sizes;
}

Integer predicted_vertex_count(int q, int N, int M) {
  Integer total = 0;
  for (const Integer& s : rank_sizes(q, N, M)) total += s;
  return total;
}

std::vector<Vertex> enumerate_vertices(int q, int N, int M, std::size_t cap) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (N < 1 || M < 1) throw std::invalid_argument("N and M must be positive");
  const Integer total = predicted_vertex_count(q, N, M);
  if (total > Integer(static_cast<unsigned long>(cap))) {
    const std::size_t predicted =
        total.fits_ulong_p() ? total.get_ui() : static_cast<std::size_t>(-1);
    throw CapacityError(predicted, cap);
  }
  std::vector<Vertex> out;
  out.reserve(total.get_ui());
  for (int i = 0; i <= N; ++i) append_rank_block(q, N, M, i, out);
  return out;
}

bool is_subspace_of(const Vertex& y, const Vertex& z) {
  check_same_params(y, z);
  if (y.dim == 0) return true;
  if (y.dim > z.dim) return false;
  return rref(GFMatrix::vstack(z.generator(), y.generator())).rank ==
         static_cast<std::size_t>(z.dim);
}

bool covers(const Vertex& z, const Vertex& y) {
  check_same_params(y, z);
  return z.dim == y.dim + 1 && is_subspace_of(y, z);
}

}  // namespace aq
