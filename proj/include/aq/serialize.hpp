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

#include <json.hpp>

#include "aq/check.hpp"
#include "aq/operators.hpp"
#include "aq/poset.hpp"
#include "aq/spectral.hpp"
#include "aq/tmodules.hpp"

namespace aq {

using Json = nlohmann::ordered_json;

// {"a": "n/d", "b": "n/d"} meaning a + b*sqrt(q).
Json to_json(const ExactScalar& x);
Json to_json(const ExactMatrix& m);
// Column vector as a flat array of scalars.
Json vector_json(const ExactMatrix& v);
Json to_json(const std::vector<CheckRow>& rows);

Json to_json(const PosetInstance& p);
Json to_json(const CountingReport& report);
Json to_json(const RelationReport& report);
Json to_json(const Spectrum& spectrum);
Json to_json(const BandProfile& profile);
Json to_json(const PsiSumReport& report);
Json to_json(const ModuleWitness& w);
Json to_json(const LeonardProfile& profile);

// Scalar objects render as "2*sqrt(2)"; everything else is flattened to
// "path: value" lines.
std::string render_table(const Json& doc);

}  // namespace aq
