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

#include "aq/tmodules.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "aq/errors.hpp"

namespace aq {
namespace {

ExactScalar rat(const Rational& r, int q) { return ExactScalar::rational(r, q); }

Rational q_power(int q, int e) {
  if (e >= 0) return Rational(int_pow(q, e));
  return Rational(1) / Rational(int_pow(q, -e));
}

ExactMatrix embed(const ExactMatrix& local, std::size_t col, std::size_t offset, std::size_t n, int q) {
  ExactMatrix v(n, 1, q);
  for (std::size_t k = 0; k < local.rows(); ++k) v(offset + k, 0) = local(k, col);
  return v;
}

ExactScalar dot(const ExactMatrix& x, const ExactMatrix& y) {
  ExactScalar s(x.base());
  for (std::size_t k = 0; k < x.rows(); ++k) fma(s, x(k, 0), y(k, 0));
  return s;
}

// Index of the first nonzero entry of a column, or rows() if none.
std::size_t first_nonzero(const ExactMatrix& v) {
  for (std::size_t k = 0; k < v.rows(); ++k) {
    if (!v(k, 0).is_zero()) return k;
  }
  return v.rows();
}

std::vector<ExactScalar> poly_mul_linear(const std::vector<ExactScalar>& p, const ExactScalar& root) {
  // p(x) * (x - root)
  std::vector<ExactScalar> out(p.size() + 1);
  for (std::size_t k = 0; k < p.size(); ++k) {
    out[k + 1] += p[k];
    out[k] -= p[k] * root;
  }
  return out;
}

bool poly_equal(const std::vector<ExactScalar>& a, const std::vector<ExactScalar>& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) {
    const ExactScalar x = k < a.size() ? a[k] : ExactScalar();
    const ExactScalar y = k < b.size() ? b[k] : ExactScalar();
    if (!(x == y)) return false;
  }
  return true;
}

std::vector<ExactScalar> module_eigenvalues(int q, int N, int M, int d) {
  std::vector<ExactScalar> out;
  for (int i = 0; i <= d; ++i) out.push_back(theta(q, N, M, HalfIndex{N - d + 2 * i}));
  return out;
}

std::vector<ModuleWitness> seed_witnesses(const OperatorSet& ops, int r, int d, const ExactMatrix& stratum) {
  std::vector<ModuleWitness> out;
  for (std::size_t c = 0; c < stratum.cols(); ++c) {
    ModuleWitness w{r, d, {}};
    w.basis.push_back(embed(stratum, c, ops.rank_begin(r), ops.size(), ops.q));
    for (int i = 1; i <= d; ++i) w.basis.push_back(ops.R * w.basis.back());
    out.push_back(std::move(w));
  }
  return out;
}

}  // namespace

bool in_psi(int r, int d, int N, int M) {
  return 0 <= r && r <= N && 0 <= d && d <= N && N - 2 * r <= d && d <= N - r && d <= N + M - 2 * r;
}

Rational predicted_mult(int r, int d, int q, int N, int M) {
  if (!in_psi(r, d, N, M)) return Rational(0);
  if (r + d == N) return mu(r, N, M, q);
  const int top = 2 * N - 2 * r - d;
  return mu(2 * r + d - N, N, M, q) *
         (q_binomial(top, N - r - d, q) - q_binomial(top, N - r - d - 1, q));
}

std::vector<PsiEntry> psi_set(int q, int N, int M) {
  std::vector<PsiEntry> out;
  for (int r = 0; r <= N; ++r) {
    for (int d = 0; d <= N; ++d) {
      if (in_psi(r, d, N, M)) out.push_back({r, d, predicted_mult(r, d, q, N, M), HalfIndex{N - d}});
    }
  }
  return out;
}

PsiSumReport verify_psisum(int q, int N, int M) {
  PsiSumReport report;
  report.pass = true;
  for (const PsiEntry& e : psi_set(q, N, M)) {
    PsiSumRow row{e.r, e.d, Rational(0), Rational(0), true};
    for (int l = 0; l <= N - e.r - e.d; ++l) {
      row.pass = row.pass && in_psi(e.r - l, e.d + 2 * l, N, M);
      row.lhs += predicted_mult(e.r - l, e.d + 2 * l, q, N, M);
    }
    row.rhs = mu(2 * e.r + e.d - N, N, M, q) * q_binomial(2 * N - 2 * e.r - e.d, N - e.r - e.d, q);
    row.pass = row.pass && row.lhs == row.rhs;
    report.pass = report.pass && row.pass;
    report.rows.push_back(row);
  }
  return report;
}

Rational xi(int i, int r, int d, int q, int N, int M) {
  (void)r;
  if (i < 1 || i > d) throw std::out_of_range("xi index must lie in [1, d]");
  Rational v = q_power(q, N + M - d) * Rational(int_pow(q, i) - 1) * Rational(int_pow(q, d) - int_pow(q, i - 1));
  return v / Rational((q - 1) * (q - 1));
}

Rational xi_prime(int i, int r, int d, int q, int N, int M) {
  if (i < 1 || i > d) throw std::out_of_range("xi' index must lie in [1, d]");
  Rational v = q_power(q, N + M - r - d) * Rational(int_pow(q, i) - 1) * Rational(int_pow(q, d + 1 - i) - 1);
  return v / Rational((q - 1) * (q - 1));
}

std::vector<std::pair<HalfIndex, Integer>> dims_from_psi(int q, int N, int M) {
  std::vector<std::pair<HalfIndex, Integer>> out;
  const auto psi = psi_set(q, N, M);
  for (HalfIndex i : half_indices(N)) {
    const HalfIndex low = i.twice <= N ? i : i.reflected(N);
    Rational dim(0);
    for (const PsiEntry& e : psi) {
      const int offset = low.twice - e.t.twice;  // 2(i - t)
      if (offset >= 0 && offset % 2 == 0) dim += e.predicted_mult;
    }
    out.emplace_back(i, dim.get_num());
  }
  return out;
}

Decomposition decompose(const OperatorSet& ops) {
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  Decomposition out;
  std::map<std::pair<int, int>, std::size_t> observed;

  for (int r = 0; r <= N; ++r) {
    const std::size_t nr = ops.rank_size(r);
    const ExactMatrix lowest =
        r == 0 ? ExactMatrix::identity(nr, q)
               : kernel_basis(ops.L.block(ops.rank_begin(r - 1), ops.rank_size(r - 1), ops.rank_begin(r), nr));
    if (lowest.cols() == 0) continue;

    ExactMatrix raise_power = ExactMatrix::identity(nr, q);  // R^d restricted to block r
    ExactMatrix previous(nr, 0, q);                          // S_{d-1}
    for (int d = 0; d <= N - r; ++d) {
      ExactMatrix current;
      if (r + d + 1 <= N) {
        raise_power = ops.R.block(ops.rank_begin(r + d + 1), ops.rank_size(r + d + 1), ops.rank_begin(r + d),
                                  ops.rank_size(r + d)) *
                      raise_power;
        current = lowest * kernel_basis(raise_power * lowest);
      } else {
        current = lowest;
      }

      const ExactMatrix stratum =
          previous.cols() == 0 ? current : current * kernel_basis(previous.transpose() * current);
      if (stratum.cols() != current.cols() - previous.cols()) {
        throw StructuralError(r, d, "orthogonal stratum has the wrong dimension");
      }
      if (stratum.cols() > 0) {
        if (!in_psi(r, d, N, M)) throw StructuralError(r, d, "module class outside the admissible set");
        observed[{r, d}] = stratum.cols();
        for (auto& w : seed_witnesses(ops, r, d, stratum)) out.witnesses.push_back(std::move(w));
      }
      previous = current;
    }
  }

  for (const PsiEntry& e : psi_set(q, N, M)) {
    const auto it = observed.find({e.r, e.d});
    const std::size_t count = it == observed.end() ? 0 : it->second;
    out.multiplicities.push_back({e.r, e.d, count, e.predicted_mult});
    if (Rational(static_cast<unsigned long>(count)) != e.predicted_mult) {
      throw StructuralError(e.r, e.d,
                            "observed multiplicity " + std::to_string(count) + " vs predicted " + e.predicted_mult.get_str());
    }
  }

  // witness vectors live in single rank blocks, so the stacked rank is the
  // sum of the per-block ranks
  for (int k = 0; k <= N; ++k) {
    std::vector<ExactMatrix> cols;
    for (const auto& w : out.witnesses) {
      const int i = k - w.r;
      if (i >= 0 && i <= w.d) {
        cols.push_back(w.basis[static_cast<std::size_t>(i)].block(ops.rank_begin(k), ops.rank_size(k), 0, 1));
      }
    }
    const std::size_t block_rank = cols.empty() ? 0 : rank(ExactMatrix::hcat(cols, ops.rank_size(k), q));
    if (block_rank != ops.rank_size(k)) {
      throw StructuralError(k, -1, "witness vectors span " + std::to_string(block_rank) + " of " +
                                       std::to_string(ops.rank_size(k)) + " dimensions in rank block");
    }
    out.basis_rank += block_rank;
  }
  return out;
}

void orthogonalize(const OperatorSet& ops, Decomposition& decomposition) {
  auto& ws = decomposition.witnesses;
  for (std::size_t start = 0; start < ws.size();) {
    std::size_t end = start;
    while (end < ws.size() && ws[end].r == ws[start].r && ws[end].d == ws[start].d) ++end;
    std::vector<ExactMatrix> done;
    for (std::size_t k = start; k < end; ++k) {
      ExactMatrix u = ws[k].w0();
      for (const auto& prev : done) u -= prev * (dot(u, prev) / dot(prev, prev));
      done.push_back(u);
      ws[k].basis.assign(1, u);
      for (int i = 1; i <= ws[k].d; ++i) ws[k].basis.push_back(ops.R * ws[k].basis.back());
    }
    start = end;
  }
}

bool is_orthogonal(const Decomposition& decomposition) {
  std::vector<std::pair<int, const ExactMatrix*>> vectors;  // (rank, vector)
  for (const auto& w : decomposition.witnesses) {
    for (int i = 0; i <= w.d; ++i) vectors.emplace_back(w.r + i, &w.basis[static_cast<std::size_t>(i)]);
  }
  for (std::size_t a = 0; a < vectors.size(); ++a) {
    for (std::size_t b = a + 1; b < vectors.size(); ++b) {
      if (vectors[a].first != vectors[b].first) continue;
      if (!dot(*vectors[a].second, *vectors[b].second).is_zero()) return false;
    }
  }
  return true;
}

bool module_matrix(const OperatorSet& ops, const ModuleWitness& w, ExactMatrix& out) {
  const auto size = static_cast<std::size_t>(w.d) + 1;
  out = ExactMatrix(size, size, ops.q);
  for (std::size_t i = 0; i < size; ++i) {
    ExactMatrix residual = ops.A * w.basis[i];
    for (std::size_t j : {i - 1, i + 1}) {
      if (j >= size) continue;  // wraps for i == 0
      const ExactMatrix& wj = w.basis[j];
      const std::size_t k = first_nonzero(wj);
      if (k == wj.rows()) return false;
      const ExactScalar c = residual(k, 0) / wj(k, 0);
      residual -= wj * c;
      out(j, i) = c;
    }
    if (!residual.is_zero()) return false;
  }
  return true;
}

ExactMatrix expected_module_matrix(int r, int d, int q, int N, int M) {
  const auto size = static_cast<std::size_t>(d) + 1;
  ExactMatrix m(size, size, q);
  for (int i = 1; i <= d; ++i) {
    const auto k = static_cast<std::size_t>(i);
    m(k, k - 1) = ExactScalar::one(q);
    m(k - 1, k) = rat(xi(i, r, d, q, N, M), q);
  }
  return m;
}

std::vector<ExactScalar> tridiagonal_charpoly(const ExactMatrix& m) {
  const int q = m.base();
  std::vector<ExactScalar> prev2;                          // p_{k-2}
  std::vector<ExactScalar> prev1{ExactScalar::one(q)};     // p_{k-1}
  for (std::size_t k = 0; k < m.rows(); ++k) {
    std::vector<ExactScalar> next = poly_mul_linear(prev1, m(k, k));
    if (k > 0) {
      const ExactScalar coupling = m(k, k - 1) * m(k - 1, k);
      for (std::size_t c = 0; c < prev2.size(); ++c) next[c] -= coupling * prev2[c];
    }
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

std::vector<ExactScalar> poly_from_roots(const std::vector<ExactScalar>& roots, int q) {
  std::vector<ExactScalar> p{ExactScalar::one(q)};
  for (const auto& root : roots) p = poly_mul_linear(p, root);
  return p;
}

std::vector<CheckRow> verify_module(const OperatorSet& ops, const ModuleWitness& w) {
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  const auto size = static_cast<std::size_t>(w.d) + 1;
  std::vector<CheckRow> rows;

  bool shape = w.basis.size() == size;
  for (const auto& v : w.basis) shape = shape && !v.is_zero();
  rows.push_back({"basis_shape", "d+1 nonzero vectors", shape});
  if (!shape) return rows;

  bool in_block = true;
  bool dual_action = true;
  bool raise = true;
  bool lower_q = ops.L * w.basis[0] == ExactMatrix(ops.size(), 1, q);
  bool lower = (ops.Lprime * w.basis[0]).is_zero();
  for (std::size_t i = 0; i < size; ++i) {
    const int level = w.r + static_cast<int>(i);
    const ExactMatrix& wi = w.basis[i];
    in_block = in_block && level <= N && ops.Estar[static_cast<std::size_t>(level)] * wi == wi;
    dual_action = dual_action && ops.Astar * wi == wi * rat(q_power(q, -level), q);
    const ExactMatrix raised = ops.R * wi;
    raise = raise && (i + 1 < size ? raised == w.basis[i + 1] : raised.is_zero());
    if (i > 0) {
      const int k = static_cast<int>(i);
      lower_q = lower_q && ops.L * wi == w.basis[i - 1] * rat(xi(k, w.r, w.d, q, N, M), q);
      lower = lower && ops.Lprime * wi == w.basis[i - 1] * rat(xi_prime(k, w.r, w.d, q, N, M), q);
    }
  }
  rows.push_back({"subconstituent_membership", "w_i in E*_{r+i} V", in_block});
  rows.push_back({"raising_action", "R w_i = w_{i+1}, R w_d = 0", raise});
  rows.push_back({"qlowering_action", "L w_i = xi_i w_{i-1}, L w_0 = 0", lower_q});
  rows.push_back({"lowering_action", "L' w_i = xi'_i w_{i-1}, L' w_0 = 0", lower});
  rows.push_back({"dual_action", "A* w_i = q^{-r-i} w_i", dual_action});

  ExactMatrix observed;
  const bool closed = module_matrix(ops, w, observed);
  rows.push_back({"adjacency_tridiagonal", "matrix of A on {w_i} has 1 below, xi_i above, 0 on the diagonal",
                  closed && observed == expected_module_matrix(w.r, w.d, q, N, M)});
  rows.push_back({"module_spectrum", "det(xI - matrix) = prod (x - theta_{t+i})",
                  closed && poly_equal(tridiagonal_charpoly(observed),
                                       poly_from_roots(module_eigenvalues(q, N, M, w.d), q))});
  return rows;
}

LeonardProfile leonard_profile(const OperatorSet& ops, const ModuleWitness& w) {
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  const int d = w.d;
  const int r = w.r;
  LeonardProfile p;
  p.d = d;
  p.t = HalfIndex{N - d};
  // exponents in units of sqrt(q): 2(d + t) + M = N + M + d, M + 2t = N + M - d
  p.h = sqrt_q_power(q, N + M + d) * Rational(1, q - 1);
  p.h_star = rat(q_power(q, -r), q);
  p.s = rat(-q_power(q, -d - 1), q);
  p.theta0 = sqrt_q_power(q, N + M - d) * Rational(Rational(int_pow(q, d) - 1) / (q - 1));
  p.theta0_star = rat(q_power(q, -r), q);
  for (int i = 0; i <= d; ++i) {
    ExactScalar ti = sqrt_q_power(q, 2 * (d - i) + N + M - d) - sqrt_q_power(q, 2 * i + N + M - d);
    p.eigenvalue_sequence.push_back(ti * Rational(1, q - 1));
    p.dual_eigenvalue_sequence.push_back(rat(q_power(q, -r - i), q));
  }
  ExactMatrix observed;
  p.bipartite = module_matrix(ops, w, observed);
  for (std::size_t k = 0; k < observed.rows() && p.bipartite; ++k) p.bipartite = observed(k, k).is_zero();
  return p;
}

std::vector<CheckRow> verify_leonard(const OperatorSet& ops, const ModuleWitness& w, const LeonardProfile& p) {
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  std::vector<CheckRow> rows;

  rows.push_back({"leonard_diameter", "d(Phi) = " + std::to_string(p.d),
                  p.d == w.d && w.basis.size() == static_cast<std::size_t>(p.d) + 1});

  bool sequence = p.eigenvalue_sequence.size() == static_cast<std::size_t>(w.d) + 1;
  for (int i = 0; sequence && i <= w.d; ++i) {
    sequence = p.eigenvalue_sequence[static_cast<std::size_t>(i)] == theta(q, N, M, HalfIndex{p.t.twice + 2 * i});
  }
  ExactMatrix observed;
  const bool closed = module_matrix(ops, w, observed);
  sequence = sequence && closed &&
             poly_equal(tridiagonal_charpoly(observed), poly_from_roots(p.eigenvalue_sequence, q));
  rows.push_back({"leonard_eigenvalue_sequence", "theta_i(Phi) = theta_{t+i}, roots of the module matrix", sequence});

  bool dual = p.dual_eigenvalue_sequence.size() == w.basis.size();
  for (std::size_t i = 0; dual && i < w.basis.size(); ++i) {
    dual = ops.Astar * w.basis[i] == w.basis[i] * p.dual_eigenvalue_sequence[i];
  }
  rows.push_back({"leonard_dual_sequence", "A* w_i = theta*_i(Phi) w_i", dual});

  rows.push_back({"leonard_theta0", "theta_0(Phi) = " + p.theta0.str(),
                  p.theta0 == theta(q, N, M, p.t) && p.theta0 == p.eigenvalue_sequence.front()});

  const ExactMatrix dual_w0 = ops.Astar * w.w0();
  const std::size_t k = first_nonzero(w.w0());
  const ExactScalar observed_dual = dual_w0(k, 0) / w.w0()(k, 0);
  rows.push_back({"leonard_dual_theta0", "theta*_0(Phi) = " + p.theta0_star.str(), p.theta0_star == observed_dual});
  rows.push_back({"leonard_h_star", "h*(Phi) = " + p.h_star.str(), p.h_star == observed_dual});

  // theta_0(Phi) = h(Phi) (1 - q^{-d})
  const ExactScalar from_h = p.h * Rational(Rational(1) - q_power(q, -w.d));
  rows.push_back({"leonard_h", "h(Phi) = " + p.h.str(), from_h == p.theta0});
  rows.push_back({"leonard_s", "s(Phi) = " + p.s.str(), p.s == rat(-q_power(q, -w.d - 1), q)});
  rows.push_back({"leonard_bipartite", "module matrix has zero diagonal", p.bipartite});
  return rows;
}

std::vector<CheckRow> verify_decomposition(const OperatorSet& ops, const Decomposition& decomposition,
                                           const Spectrum& spectrum) {
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  std::vector<CheckRow> rows;

  {
    bool match = true;
    std::ostringstream detail;
    for (const auto& m : decomposition.multiplicities) {
      match = match && Rational(static_cast<unsigned long>(m.observed)) == m.predicted;
      detail << "(" << m.r << "," << m.d << "):" << m.observed << "/" << m.predicted.get_str() << " ";
    }
    rows.push_back({"multiplicities_match", detail.str(), match});
  }

  {
    Rational total(0);
    for (const PsiEntry& e : psi_set(q, N, M)) total += e.predicted_mult * (e.d + 1);
    std::size_t vectors = 0;
    for (const auto& w : decomposition.witnesses) vectors += w.basis.size();
    const bool ok = total == Rational(static_cast<unsigned long>(ops.size())) && vectors == ops.size() &&
                    decomposition.basis_rank == ops.size();
    rows.push_back({"completeness",
                    "sum mult (d+1) = " + total.get_str() + ", rank " + std::to_string(decomposition.basis_rank) +
                        " of " + std::to_string(ops.size()),
                    ok});
  }

  {
    std::vector<std::size_t> hits(static_cast<std::size_t>(2 * N + 1), 0);
    for (const auto& w : decomposition.witnesses) {
      for (int i = 0; i <= w.d; ++i) ++hits[static_cast<std::size_t>(N - w.d + 2 * i)];
    }
    const auto from_psi = dims_from_psi(q, N, M);
    bool ok = true;
    for (std::size_t k = 0; k < hits.size(); ++k) {
      ok = ok && hits[k] == spectrum.entries[k].dim &&
           from_psi[k].second == Integer(static_cast<unsigned long>(hits[k]));
    }
    rows.push_back({"eigenvalue_bookkeeping", "module eigenvalue windows reproduce every eigenspace dimension", ok});
  }

  {
    // (A matrix, A* diagonal) determines the class and vice versa
    std::map<std::string, std::pair<int, int>> by_key;
    std::map<std::pair<int, int>, std::string> by_class;
    bool ok = true;
    for (const auto& w : decomposition.witnesses) {
      ExactMatrix mat;
      if (!module_matrix(ops, w, mat)) {
        ok = false;
        continue;
      }
      std::ostringstream key;
      for (std::size_t a = 0; a < mat.rows(); ++a) {
        for (std::size_t b = 0; b < mat.cols(); ++b) key << mat(a, b).str() << ",";
      }
      key << "|";
      for (const auto& v : w.basis) key << rat(q_power(q, -(w.r + static_cast<int>(&v - &w.basis[0]))), q).str() << ",";
      const auto cls = std::make_pair(w.r, w.d);
      const auto [it, fresh] = by_key.emplace(key.str(), cls);
      ok = ok && (fresh || it->second == cls);
      const auto [jt, fresh_cls] = by_class.emplace(cls, key.str());
      ok = ok && (fresh_cls || jt->second == key.str());
    }
    rows.push_back({"class_separation", "witnesses share (r,d) iff their (A, A*) actions coincide", ok});
  }

  {
    bool nonzero = true;
    bool cross = true;
    for (const PsiEntry& e : psi_set(q, N, M)) {
      for (int i = 1; i <= e.d; ++i) {
        const Rational x = xi(i, e.r, e.d, q, N, M);
        const Rational xp = xi_prime(i, e.r, e.d, q, N, M);
        nonzero = nonzero && sgn(x) != 0 && sgn(xp) != 0;
        cross = cross && x == q_power(q, e.r + i - 1) * xp;
      }
    }
    rows.push_back({"xi_nonvanishing", "xi_i, xi'_i != 0 on every class", nonzero});
    rows.push_back({"xi_cross_identity", "xi_i = q^{r+i-1} xi'_i", cross});
  }

  rows.push_back({"full_module_present", "(0, N) admissible", in_psi(0, N, N, M)});
  return rows;
}

}  // namespace aq
