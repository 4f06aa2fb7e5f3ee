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

#include "aq/spectral.hpp"

#include <set>
#include <sstream>

namespace aq {
namespace {

// Above this size the pairwise idempotent products are replaced by the
// action on the eigenbases, which determines them.
constexpr std::size_t kFullProductLimit = 300;

ExactScalar rat(const Rational& r, int q) { return ExactScalar::rational(r, q); }

ExactMatrix scaled_identity(std::size_t n, const ExactScalar& s, int q) {
  ExactMatrix m(n, n, q);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

std::string join_dims(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  os << ")";
  return os.str();
}

}  // namespace

std::string HalfIndex::str() const {
  if (is_integer()) return std::to_string(twice / 2);
  return std::to_string(twice) + "/2";
}

std::vector<HalfIndex> half_indices(int N) {
  std::vector<HalfIndex> out;
  for (int t = 0; t <= 2 * N; ++t) out.push_back({t});
  return out;
}

ExactScalar theta(int q, int N, int M, HalfIndex i) {
  // q^{N-i} q^{M/2} and q^i q^{M/2} are integer powers of sqrt(q)
  ExactScalar t = sqrt_q_power(q, 2 * N - i.twice + M) - sqrt_q_power(q, i.twice + M);
  return t * Rational(1, q - 1);
}

std::vector<std::pair<HalfIndex, ExactScalar>> eigenvalues(int q, int N, int M) {
  std::vector<std::pair<HalfIndex, ExactScalar>> out;
  for (HalfIndex i : half_indices(N)) out.emplace_back(i, theta(q, N, M, i));
  return out;
}

std::vector<std::pair<HalfIndex, Integer>> predicted_dims(int q, int N, int M) {
  std::vector<std::pair<HalfIndex, Integer>> out;
  for (HalfIndex i : half_indices(N)) {
    const HalfIndex low = i.twice <= N ? i : i.reflected(N);
    // mu_m binom(N - m, i - m/2) over m = 2i, 2i - 2, ... >= 0
    Rational dim(0);
    for (int m = low.twice % 2; m <= low.twice; m += 2) {
      dim += mu(m, N, M, q) * q_binomial(N - m, (low.twice - m) / 2, q);
    }
    out.emplace_back(i, dim.get_num());
  }
  return out;
}

ExactMatrix eigenspace_basis(const OperatorSet& ops, HalfIndex i) {
  const ExactScalar t = theta(ops.q, ops.N, ops.M, i);
  return kernel_basis(ops.A - scaled_identity(ops.size(), t, ops.q));
}

std::vector<ExactScalar> Spectrum::thetas() const {
  std::vector<ExactScalar> out;
  for (const auto& e : entries) out.push_back(e.theta);
  return out;
}

Spectrum compute_spectrum(const OperatorSet& ops) {
  Spectrum s;
  s.q = ops.q;
  s.N = ops.N;
  s.M = ops.M;
  for (const auto& [index, value] : eigenvalues(ops.q, ops.N, ops.M)) {
    ExactMatrix basis = eigenspace_basis(ops, index);
    const std::size_t dim = basis.cols();
    s.entries.push_back({index, value, dim, std::move(basis)});
  }
  return s;
}

ExactMatrix apply_idempotent(const OperatorSet& ops, HalfIndex i, ExactMatrix y) {
  const ExactScalar ti = theta(ops.q, ops.N, ops.M, i);
  for (HalfIndex j : half_indices(ops.N)) {
    if (j == i) continue;
    const ExactScalar tj = theta(ops.q, ops.N, ops.M, j);
    ExactMatrix next = ops.A * y;
    next -= y * tj;
    next *= ext_inv(ti - tj);
    y = std::move(next);
  }
  return y;
}

ExactMatrix primitive_idempotent(const OperatorSet& ops, HalfIndex i) {
  return apply_idempotent(ops, i, ExactMatrix::identity(ops.size(), ops.q));
}

std::vector<CheckRow> verify_spectrum(const OperatorSet& ops, const Spectrum& spectrum) {
  std::vector<CheckRow> rows;
  const int q = ops.q;
  const int N = ops.N;
  const int M = ops.M;
  const std::size_t n = ops.size();
  const auto indices = half_indices(N);

  {
    bool distinct = true;
    bool antisymmetric = true;
    bool differences = true;
    for (HalfIndex i : indices) {
      const ExactScalar ti = spectrum.at(i).theta;
      antisymmetric = antisymmetric && spectrum.at(i.reflected(N)).theta == -ti;
      for (HalfIndex j : indices) {
        if (j == i) continue;
        const ExactScalar tj = spectrum.at(j).theta;
        distinct = distinct && !(ti == tj);
        // (q^j - q^i)(q^{N-i-j} + 1) q^{M/2}/(q-1), expanded into powers of sqrt(q)
        ExactScalar rhs = sqrt_q_power(q, 2 * N - i.twice + M) + sqrt_q_power(q, j.twice + M) -
                          sqrt_q_power(q, 2 * N - j.twice + M) - sqrt_q_power(q, i.twice + M);
        rhs *= Rational(1, q - 1);
        differences = differences && (ti - tj) == rhs;
      }
    }
    rows.push_back({"eigenvalues_distinct", "pairwise distinct over " + std::to_string(indices.size()) + " indices", distinct});
    rows.push_back({"eigenvalues_antisymmetric", "theta_{N-i} = -theta_i", antisymmetric});
    rows.push_back({"eigenvalue_differences", "theta_i - theta_j closed form", differences});
  }

  {
    const auto predicted = predicted_dims(q, N, M);
    std::vector<std::size_t> observed;
    std::vector<std::size_t> expected;
    bool match = true;
    std::size_t total = 0;
    for (std::size_t k = 0; k < indices.size(); ++k) {
      observed.push_back(spectrum.entries[k].dim);
      expected.push_back(predicted[k].second.get_ui());
      match = match && observed.back() == expected.back();
      total += observed.back();
    }
    rows.push_back({"eigenspace_dims_match_prediction",
                    "kernel " + join_dims(observed) + " vs predicted " + join_dims(expected), match});
    rows.push_back({"spectrum_complete", std::to_string(total) + " of " + std::to_string(n), total == n});

    bool symmetric = true;
    for (HalfIndex i : indices) symmetric = symmetric && spectrum.at(i).dim == spectrum.at(i.reflected(N)).dim;
    rows.push_back({"eigenspace_dims_symmetric", "dim E_i V = dim E_{N-i} V", symmetric});
  }

  {
    bool eigen = true;
    for (const auto& e : spectrum.entries) {
      eigen = eigen && ops.A * e.eigenbasis == e.eigenbasis * e.theta;
    }
    rows.push_back({"eigenbases_verified", "A B_i = theta_i B_i", eigen});

    ExactMatrix y = ExactMatrix::identity(n, q);
    for (const auto& e : spectrum.entries) {
      ExactMatrix next = ops.A * y;
      next -= y * e.theta;
      y = std::move(next);
    }
    rows.push_back({"minimal_polynomial", "prod_i (A - theta_i I) = 0", y.is_zero()});
  }

  // primitive idempotents
  std::vector<ExactMatrix> E;
  for (HalfIndex i : indices) E.push_back(primitive_idempotent(ops, i));

  {
    bool trace_ok = true;
    bool eigen_ok = true;
    bool on_bases = true;
    ExactMatrix sum(n, n, q);
    ExactMatrix spectral(n, n, q);
    for (std::size_t a = 0; a < indices.size(); ++a) {
      const auto& entry = spectrum.entries[a];
      trace_ok = trace_ok && E[a].trace() == rat(Rational(static_cast<unsigned long>(entry.dim)), q);
      eigen_ok = eigen_ok && ops.A * E[a] == E[a] * entry.theta;
      for (std::size_t b = 0; b < indices.size(); ++b) {
        const ExactMatrix& basis = spectrum.entries[b].eigenbasis;
        const ExactMatrix image = apply_idempotent(ops, indices[a], basis);
        on_bases = on_bases && (a == b ? image == basis : image.is_zero());
      }
      sum += E[a];
      spectral += E[a] * entry.theta;
    }
    rows.push_back({"idempotent_trace", "trace E_i = dim E_i V", trace_ok});
    rows.push_back({"idempotent_eigen", "A E_i = theta_i E_i", eigen_ok});
    rows.push_back({"idempotent_on_eigenbases", "E_i B_j = delta_ij B_j (column space and orthogonality)", on_bases});
    rows.push_back({"idempotents_resolve_identity", "sum_i E_i = I", sum == ExactMatrix::identity(n, q)});
    rows.push_back({"spectral_decomposition", "A = sum_i theta_i E_i", spectral == ops.A});
  }

  if (n <= kFullProductLimit) {
    bool square = true;
    bool orthogonal = true;
    for (std::size_t a = 0; a < indices.size(); ++a) {
      square = square && apply_idempotent(ops, indices[a], E[a]) == E[a];
      // E_i E_j = E_j E_i, so one ordering per pair suffices
      for (std::size_t b = a + 1; b < indices.size(); ++b) {
        orthogonal = orthogonal && apply_idempotent(ops, indices[a], E[b]).is_zero();
      }
    }
    rows.push_back({"idempotent_square", "E_i^2 = E_i", square});
    rows.push_back({"idempotents_orthogonal", "E_i E_j = 0 for i != j", orthogonal});
  }

  {
    bool conj = true;
    bool intertwine = true;
    for (std::size_t a = 0; a < indices.size(); ++a) {
      const std::size_t r = static_cast<std::size_t>(indices[a].reflected(N).twice);
      conj = conj && ops.S * (E[a] * ops.S) == E[r];
      intertwine = intertwine && ops.S * E[a] == E[r] * ops.S;
    }
    rows.push_back({"sign_conjugation", "S E_i S = E_{N-i}", conj});
    rows.push_back({"sign_intertwining", "S E_i = E_{N-i} S", intertwine});
  }
  return rows;
}

bool is_block_tridiagonal(const BandProfile& profile, const std::vector<HalfIndex>& order) {
  for (std::size_t a = 0; a < order.size(); ++a) {
    for (std::size_t b = 0; b < order.size(); ++b) {
      const std::size_t gap = a > b ? a - b : b - a;
      if (gap > 1 && profile.at(order[a], order[b])) return false;
    }
  }
  return true;
}

BandProfile qpoly_band_profile(const OperatorSet& ops, const Spectrum& spectrum) {
  BandProfile profile;
  profile.indices = half_indices(ops.N);
  const std::size_t k = profile.indices.size();
  profile.nonzero.assign(k, std::vector<bool>(k, false));

  // E_j = B_j C_j with C_j of full row rank, so E_i A* E_j = 0 iff
  // E_i A* B_j = 0.
  for (std::size_t b = 0; b < k; ++b) {
    const ExactMatrix dual_image = ops.Astar * spectrum.entries[b].eigenbasis;
    for (std::size_t a = 0; a < k; ++a) {
      profile.nonzero[a][b] = !apply_idempotent(ops, profile.indices[a], dual_image).is_zero();
    }
  }

  profile.adjacent_iff_nonzero = true;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) {
      if (a == b) continue;
      const bool adjacent = (a > b ? a - b : b - a) == 2;
      profile.adjacent_iff_nonzero = profile.adjacent_iff_nonzero && profile.nonzero[a][b] == adjacent;
    }
  }

  for (HalfIndex i : profile.indices) {
    if (i.is_integer()) profile.ordering_integers_first.push_back(i);
  }
  for (HalfIndex i : profile.indices) {
    if (!i.is_integer()) profile.ordering_integers_first.push_back(i);
  }
  for (HalfIndex i : profile.indices) {
    if (!i.is_integer()) profile.ordering_halves_first.push_back(i);
  }
  for (HalfIndex i : profile.indices) {
    if (i.is_integer()) profile.ordering_halves_first.push_back(i);
  }
  profile.tridiagonal_integers_first = is_block_tridiagonal(profile, profile.ordering_integers_first);
  profile.tridiagonal_halves_first = is_block_tridiagonal(profile, profile.ordering_halves_first);

  // A* must generate the diagonal algebra spanned by the E*_i: it does iff
  // its diagonal takes N+1 distinct values.
  std::set<std::string> diagonal_values;
  for (std::size_t v = 0; v < ops.size(); ++v) diagonal_values.insert(ops.Astar(v, v).str());
  profile.dual_generates_diagonal_algebra = diagonal_values.size() == static_cast<std::size_t>(ops.N + 1);

  profile.pass = profile.adjacent_iff_nonzero && profile.tridiagonal_integers_first &&
                 profile.tridiagonal_halves_first && profile.dual_generates_diagonal_algebra;
  return profile;
}

}  // namespace aq
