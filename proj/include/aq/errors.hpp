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
#include <stdexcept>
#include <string>

namespace aq {

// Two exact scalars (or matrices) built over different bases q were combined.
class BaseMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Two vertices or instances with different (q, N, M) were compared.
class ParameterMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested instance has more vertices than the configured cap allows.
class CapacityError : public std::runtime_error {
 public:
  CapacityError(std::size_t predicted, std::size_t cap)
      : std::runtime_error("instance has " + std::to_string(predicted) +
                           " vertices, exceeding the cap of " +
                           std::to_string(cap)),
        predicted_(predicted),
        cap_(cap) {}

  std::size_t predicted() const { return predicted_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t predicted_;
  std::size_t cap_;
};

// The module decomposition did not match its structural contract
// (direct-sum failure, multiplicity mismatch, class outside the
// admissible set).
class StructuralError : public std::runtime_error {
 public:
  StructuralError(int r, int d, const std::string& what)
      : std::runtime_error("(r,d)=(" + std::to_string(r) + "," +
                           std::to_string(d) + "): " + what),
        r_(r),
        d_(d) {}

  int r() const { return r_; }
  int d() const { return d_; }

 private:
  int r_;
  int d_;
};

}  // namespace aq
