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

#include <array>
#include <string>
#include <vector>

#include "aq/serialize.hpp"

namespace aq {

struct RunConfig {
  int q = 2;
  int N = 2;
  int M = 2;
  std::string command = "verify";  // build | verify | spectrum | decompose | report
  std::string out;                 // empty: stdout
  std::string format = "json";     // json | table
  std::size_t cap = kDefaultVertexCap;
  bool all = false;
};

struct Section {
  std::string name;
  bool pass = false;
  Json details;
  double seconds = 0;
};

struct SuiteReport {
  int q = 2;
  int N = 1;
  int M = 1;
  std::vector<Section> sections;
  bool pass = false;

  const Section* first_failure() const;
};

std::vector<std::array<int, 3>> default_instances();

// Throws std::invalid_argument for bad parameters and CapacityError when
// the predicted size exceeds the cap.
void validate(int q, int N, int M, std::size_t cap);

SuiteReport run_command(const std::string& command, int q, int N, int M, std::size_t cap = kDefaultVertexCap);

// Timings are not part of the document so that output is reproducible.
Json envelope(const SuiteReport& report);
Json envelope(const std::vector<SuiteReport>& reports);

}  // namespace aq
