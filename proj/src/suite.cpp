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

#include "aq/suite.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "aq/errors.hpp"

namespace aq {
namespace {

class Instance {
 public:
  Instance(int q, int N, int M, std::size_t cap) : q_(q), N_(N), M_(M), cap_(cap) {}

  const PosetInstance& poset() {
    if (!poset_) poset_ = build_poset(q_, N_, M_, cap_);
    return *poset_;
  }
  const OperatorSet& ops() {
    if (!ops_) ops_ = build_operators(poset());
    return *ops_;
  }
  const Spectrum& spectrum() {
    if (!spectrum_) spectrum_ = compute_spectrum(ops());
    return *spectrum_;
  }
  // Empty when the decomposition raised a structural error.
  const std::optional<Decomposition>& decomposition() {
    if (!tried_) {
      tried_ = true;
      try {
        decomposition_ = decompose(ops());
      } catch (const StructuralError& e) {
        error_ = e.what();
      }
    }
    return decomposition_;
  }
  const std::string& error() const { return error_; }

 private:
  int q_, N_, M_;
  std::size_t cap_;
  std::optional<PosetInstance> poset_;
  std::optional<OperatorSet> ops_;
  std::optional<Spectrum> spectrum_;
  std::optional<Decomposition> decomposition_;
  bool tried_ = false;
  std::string error_;
};

template <class F>
Section timed(const std::string& name, F&& body) {
  const auto start = std::chrono::steady_clock::now();
  Section s{name, false, Json::object(), 0};
  body(s);
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return s;
}

Section poset_section(Instance& in) {
  return timed("poset", [&](Section& s) {
    s.details = to_json(in.poset());
    s.pass = true;
  });
}

Section counting_section(Instance& in) {
  return timed("counting", [&](Section& s) {
    const CountingReport report = verify_counting(in.poset());
    s.details = to_json(report);
    s.details["vertex_count"] = in.poset().size();
    s.pass = report.pass;
  });
}

Section relations_section(Instance& in) {
  return timed("relations", [&](Section& s) {
    const RelationReport report = verify_relations(in.ops());
    s.details = {{"identities", to_json(report)}};
    s.pass = report.pass;
  });
}

Section spectrum_section(Instance& in) {
  return timed("spectrum", [&](Section& s) {
    const Spectrum& spectrum = in.spectrum();
    const auto checks = verify_spectrum(in.ops(), spectrum);
    s.details = {{"eigenvalue_count", spectrum.entries.size()}, {"records", to_json(spectrum)}, {"checks", to_json(checks)}};
    s.pass = all_pass(checks);
  });
}

Section band_section(Instance& in) {
  return timed("band_profile", [&](Section& s) {
    const BandProfile profile = qpoly_band_profile(in.ops(), in.spectrum());
    s.details = to_json(profile);
    s.pass = profile.pass;
  });
}

Section decomposition_section(Instance& in, bool full) {
  return timed("decomposition", [&](Section& s) {
    const auto& dec = in.decomposition();
    if (!dec) {
      s.details = {{"error", in.error()}};
      return;
    }
    const OperatorSet& ops = in.ops();
    bool pass = true;

    std::map<std::pair<int, int>, const ModuleWitness*> sample;
    Json failures = Json::array();
    for (const auto& w : dec->witnesses) {
      sample.emplace(std::make_pair(w.r, w.d), &w);
      for (const auto& row : verify_module(ops, w)) {
        if (row.pass) continue;
        pass = false;
        failures.push_back({{"r", w.r}, {"d", w.d}, {"check", row.name}});
      }
    }

    Json psi = Json::array();
    for (const auto& m : dec->multiplicities) {
      Json record = {{"r", m.r}, {"d", m.d}, {"predicted", m.predicted.get_str()}, {"observed", m.observed}};
      if (const auto it = sample.find({m.r, m.d}); it != sample.end()) {
        ExactMatrix mat;
        if (module_matrix(ops, *it->second, mat)) record["tridiagonal"] = to_json(mat);
        record["leonard"] = to_json(leonard_profile(ops, *it->second));
      }
      psi.push_back(record);
    }

    const auto checks = verify_decomposition(ops, *dec, in.spectrum());
    pass = pass && all_pass(checks) && !psi.empty();
    s.details = {{"module_count", dec->witnesses.size()},
                 {"psi", psi},
                 {"checks", to_json(checks)},
                 {"module_failures", failures}};
    if (full) {
      Decomposition orth = *dec;
      orthogonalize(ops, orth);
      s.details["orthogonal_after_pass"] = is_orthogonal(orth);
      Json witnesses = Json::array();
      for (const auto& w : dec->witnesses) witnesses.push_back(to_json(w));
      s.details["witnesses"] = witnesses;
    }
    s.pass = pass;
  });
}

Section psisum_section(int q, int N, int M) {
  return timed("psisum", [&](Section& s) {
    const PsiSumReport report = verify_psisum(q, N, M);
    s.details = {{"rows", to_json(report)}};
    s.pass = report.pass;
  });
}

Section leonard_section(Instance& in) {
  return timed("leonard", [&](Section& s) {
    const auto& dec = in.decomposition();
    if (!dec) {
      s.details = {{"error", "decomposition unavailable"}};
      return;
    }
    bool pass = true;
    Json failures = Json::array();
    for (const auto& w : dec->witnesses) {
      const LeonardProfile profile = leonard_profile(in.ops(), w);
      for (const auto& row : verify_leonard(in.ops(), w, profile)) {
        if (row.pass) continue;
        pass = false;
        failures.push_back({{"r", w.r}, {"d", w.d}, {"check", row.name}});
      }
    }
    s.details = {{"profiles_checked", dec->witnesses.size()}, {"failures", failures}};
    s.pass = pass;
  });
}

}  // namespace

const Section* SuiteReport::first_failure() const {
  for (const auto& s : sections) {
    if (!s.pass) return &s;
  }
  return nullptr;
}

std::vector<std::array<int, 3>> default_instances() {
  return {{2, 1, 1}, {2, 2, 1}, {2, 1, 2}, {2, 2, 2}, {3, 2, 1}, {2, 3, 2}, {3, 2, 2}};
}

void validate(int q, int N, int M, std::size_t cap) {
  if (!is_prime(q)) throw std::invalid_argument("q must be prime");
  if (N < 1) throw std::invalid_argument("N must be at least 1");
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  const Integer predicted = predicted_vertex_count(q, N, M);
  if (predicted > Integer(static_cast<unsigned long>(cap))) {
    throw CapacityError(predicted.fits_ulong_p() ? predicted.get_ui() : SIZE_MAX, cap);
  }
}

SuiteReport run_command(const std::string& command, int q, int N, int M, std::size_t cap) {
  validate(q, N, M, cap);
  Instance in(q, N, M, cap);
  SuiteReport report{q, N, M, {}, false};
  auto& out = report.sections;
  if (command == "build") {
    out.push_back(poset_section(in));
    out.push_back(counting_section(in));
  } else if (command == "verify") {
    out.push_back(counting_section(in));
    out.push_back(relations_section(in));
    out.push_back(spectrum_section(in));
    out.push_back(band_section(in));
    out.push_back(decomposition_section(in, false));
    out.push_back(psisum_section(q, N, M));
    out.push_back(leonard_section(in));
  } else if (command == "spectrum") {
    out.push_back(spectrum_section(in));
    out.push_back(band_section(in));
  } else if (command == "decompose") {
    out.push_back(decomposition_section(in, false));
  } else if (command == "report") {
    out.push_back(poset_section(in));
    out.push_back(counting_section(in));
    out.push_back(relations_section(in));
    out.push_back(spectrum_section(in));
    out.push_back(band_section(in));
    out.push_back(decomposition_section(in, true));
    out.push_back(psisum_section(q, N, M));
    out.push_back(leonard_section(in));
  } else {
    throw std::invalid_argument("unknown command: " + command);
  }
  report.pass = report.first_failure() == nullptr;
  return report;
}

Json envelope(const SuiteReport& report) {
  Json sections = Json::array();
  for (const auto& s : report.sections) sections.push_back({{"name", s.name}, {"pass", s.pass}, {"details", s.details}});
  return {{"params", {{"q", report.q}, {"N", report.N}, {"M", report.M}}}, {"sections", sections}, {"pass", report.pass}};
}

Json envelope(const std::vector<SuiteReport>& reports) {
  Json instances = Json::array();
  Json sections = Json::array();
  bool pass = true;
  for (const auto& r : reports) {
    const Json params = {{"q", r.q}, {"N", r.N}, {"M", r.M}};
    instances.push_back(params);
    for (const auto& s : r.sections) {
      sections.push_back({{"name", s.name}, {"params", params}, {"pass", s.pass}, {"details", s.details}});
    }
    pass = pass && r.pass;
  }
  return {{"params", {{"instances", instances}}}, {"sections", sections}, {"pass", pass}};
}

}  // namespace aq
