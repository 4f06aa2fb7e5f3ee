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

#include "aq/exact_matrix.hpp"
#include "aq/poset.hpp"

namespace aq {

// Matrices indexed by the vertex order of the poset. Entry (y, z):
//   E*_i   diagonal, 1 on rank-i vertices
//   A*     diagonal, q^{-dim y}
//   S      diagonal, (-1)^{dim y}
//   R      1 if y covers z
//   L'     1 if z covers y (= R^t)
//   L      q^{dim y} if z covers y
//   A      R + L
ExactMatrix matrix_Estar(const PosetInstance& p, int i);
ExactMatrix matrix_Astar(const PosetInstance& p);
ExactMatrix matrix_S(const PosetInstance& p);
ExactMatrix matrix_R(const PosetInstance& p);
ExactMatrix matrix_Lprime(const PosetInstance& p);
ExactMatrix matrix_L(const PosetInstance& p);
ExactMatrix matrix_A(const PosetInstance& p);

struct OperatorSet {
  int q = 2;
  int N = 1;
  int M = 1;
  // copied from the poset: first index of each rank block, plus |X|
  std::vector<std::size_t> rank_offsets;
  std::vector<ExactMatrix> Estar;
  ExactMatrix Astar;
  ExactMatrix S;
  ExactMatrix R;
  ExactMatrix Lprime;
  ExactMatrix L;
  ExactMatrix A;

  std::size_t size() const { return A.rows(); }
  std::size_t rank_begin(int i) const { return rank_offsets[static_cast<std::size_t>(i)]; }
  std::size_t rank_size(int i) const {
    return rank_offsets[static_cast<std::size_t>(i) + 1] - rank_offsets[static_cast<std::size_t>(i)];
  }
};

OperatorSet build_operators(const PosetInstance& p);

// beta = q + 1/q
ExactScalar beta(int q);

struct RelationCheck {
  std::string name;
  std::string identity;  // the relation written out
  int degree = 0;        // longest word in the relation
  bool pass = false;
};

struct RelationReport {
  std::vector<RelationCheck> rows;
  bool pass = false;

  const RelationCheck* find(const std::string& name) const;
};

// Every residual must be exactly the zero matrix.
RelationReport verify_relations(const OperatorSet& ops);
RelationReport verify_relations(const PosetInstance& p);

}  // namespace aq
