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

#include "aq/poset.hpp"

#include <algorithm>
#include <queue>

namespace aq {

PosetInstance build_poset(int q, int N, int M, std::size_t cap) {
  PosetInstance p;
  p.q = q;
  p.N = N;
  p.M = M;
  p.vertices = enumerate_vertices(q, N, M, cap);

  p.rank_offsets.assign(static_cast<std::size_t>(N) + 2, p.vertices.size());
  for (std::size_t v = p.vertices.size(); v-- > 0;) {
    p.rank_offsets[static_cast<std::size_t>(p.vertices[v].dim)] = v;
  }

  p.covers_up.assign(p.size(), {});
  p.covers_down.assign(p.size(), {});
  for (int i = 0; i < N; ++i) {
    for (std::size_t y = p.rank_begin(i); y < p.rank_end(i); ++y) {
      for (std::size_t z = p.rank_begin(i + 1); z < p.rank_end(i + 1); ++z) {
        if (covers(p.vertices[z], p.vertices[y])) {
          p.covers_up[y].push_back(z);
          p.covers_down[z].push_back(y);
        }
      }
    }
  }
  return p;
}

CountingReport verify_counting(const PosetInstance& p) {
  CountingReport report;
  const std::vector<Integer> sizes = rank_sizes(p.q, p.N, p.M);
  const Integer qm = int_pow(p.q, p.M);

  for (int i = 0; i <= p.N; ++i) {
    CountingReport::RankRow row;
    row.rank = i;
    row.expected_size = sizes[static_cast<std::size_t>(i)];
    row.actual_size = p.rank_size(i);
    row.expected_down = q_int(i, p.q).get_num();
    row.expected_up = qm * q_int(p.N - i, p.q).get_num();
    if (row.expected_size != Integer(static_cast<unsigned long>(row.actual_size))) {
      report.failures.push_back({p.rank_begin(i), "rank " + std::to_string(i) + " block size",
                                 row.expected_size.get_str(), std::to_string(row.actual_size)});
    }

    bool first = true;
    for (std::size_t v = p.rank_begin(i); v < p.rank_end(i); ++v) {
      const std::size_t down = p.covers_down[v].size();
      const std::size_t up = p.covers_up[v].size();
      if (first) {
        row.down_min = row.down_max = down;
        row.up_min = row.up_max = up;
        first = false;
      }
      row.down_min = std::min(row.down_min, down);
      row.down_max = std::max(row.down_max, down);
      row.up_min = std::min(row.up_min, up);
      row.up_max = std::max(row.up_max, up);
      if (row.expected_down != Integer(static_cast<unsigned long>(down))) {
        report.failures.push_back({v, "covers-down degree", row.expected_down.get_str(),
                                   std::to_string(down)});
      }
      if (row.expected_up != Integer(static_cast<unsigned long>(up))) {
        report.failures.push_back({v, "covers-up degree", row.expected_up.get_str(),
                                   std::to_string(up)});
      }
    }
    report.ranks.push_back(row);
  }

  for (std::size_t y = 0; y < p.size(); ++y) {
    for (std::size_t z : p.covers_up[y]) {
      const auto& down = p.covers_down[z];
      if (std::find(down.begin(), down.end(), y) == down.end()) {
        report.transpose_consistent = false;
        report.failures.push_back({y, "cover edge missing from covers_down of " + std::to_string(z),
                                   "present", "absent"});
      }
      if (p.rank(z) != p.rank(y) + 1) {
        report.graded = false;
        report.failures.push_back({y, "cover edge skips a rank", "1", std::to_string(p.rank(z) - p.rank(y))});
      }
    }
    for (std::size_t x : p.covers_down[y]) {
      const auto& up = p.covers_up[x];
      if (std::find(up.begin(), up.end(), y) == up.end()) {
        report.transpose_consistent = false;
        report.failures.push_back({y, "cover edge missing from covers_up of " + std::to_string(x),
                                   "present", "absent"});
      }
    }
  }

  // the Hasse diagram as an undirected graph
  std::vector<bool> seen(p.size(), false);
  std::queue<std::size_t> frontier;
  if (p.size() > 0) {
    seen[0] = true;
    frontier.push(0);
  }
  std::size_t reached = 0;
  while (!frontier.empty()) {
    const std::size_t v = frontier.front();
    frontier.pop();
    ++reached;
    for (const auto* nbrs : {&p.covers_up[v], &p.covers_down[v]}) {
      for (std::size_t w : *nbrs) {
        if (!seen[w]) {
          seen[w] = true;
          frontier.push(w);
        }
      }
    }
  }
  if (reached != p.size()) {
    report.connected = false;
    const auto first_unreached = static_cast<std::size_t>(
        std::find(seen.begin(), seen.end(), false) - seen.begin());
    report.failures.push_back({first_unreached, "unreachable in Hasse diagram",
                               std::to_string(p.size()), std::to_string(reached)});
  }

  report.pass = report.failures.empty();
  return report;
}

}  // namespace aq
