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
#include <string>
#include <vector>

#include "aq/gflinalg.hpp"

namespace aq {

/// The attenuated space poset for (q, N, M): vertex list in canonical order,
/// rank blocks and the cover relation in both directions.
struct PosetInstance {
  int q = 2;
  int N = 1;
  int M = 1;
  std::vector<Vertex> vertices;
  // rank_offsets[i] is the index of the first rank-i vertex; the extra
  // entry rank_offsets[N+1] equals vertices.size().
  std::vector<std::size_t> rank_offsets;
  // covers_up[y]: indices of the vertices covering y (ascending).
  std::vector<std::vector<std::size_t>> covers_up;
  // covers_down[z]: indices of the vertices z covers (ascending).
  std::vector<std::vector<std::size_t>> covers_down;

  std::size_t size() const { return vertices.size(); }
  int rank(std::size_t v) const { return vertices[v].dim; }
  std::size_t rank_begin(int i) const { return rank_offsets[static_cast<std::size_t>(i)]; }
  std::size_t rank_end(int i) const { return rank_offsets[static_cast<std::size_t>(i) + 1]; }
  std::size_t rank_size(int i) const { return rank_end(i) - rank_begin(i); }
};

PosetInstance build_poset(int q, int N, int M, std::size_t cap = kDefaultVertexCap);

struct CountingReport {
  struct RankRow {
    int rank = 0;
    Integer expected_size;
    std::size_t actual_size = 0;
    Integer expected_down;  // [i]_q
    Integer expected_up;    // q^M [N-i]_q
    // observed degree range over the block; min == max when uniform
    std::size_t down_min = 0, down_max = 0;
    std::size_t up_min = 0, up_max = 0;
  };
  struct Failure {
    std::size_t vertex = 0;
    std::string what;
    std::string expected;
    std::string actual;
  };

  std::vector<RankRow> ranks;
  std::vector<Failure> failures;
  bool transpose_consistent = true;
  bool graded = true;
  bool connected = true;
  bool pass = true;
};

CountingReport verify_counting(const PosetInstance& p);

}  // namespace aq
