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

#include "aq/serialize.hpp"

#include <sstream>

namespace aq {
namespace {

Json grid_json(const BandProfile& profile, const std::vector<HalfIndex>& order) {
  Json rows = Json::array();
  for (HalfIndex i : order) {
    Json row = Json::array();
    for (HalfIndex j : order) row.push_back(profile.at(i, j) ? 1 : 0);
    rows.push_back(row);
  }
  Json labels = Json::array();
  for (HalfIndex i : order) labels.push_back(i.str());
  return {{"ordering", labels}, {"grid", rows}, {"block_tridiagonal", is_block_tridiagonal(profile, order)}};
}

bool is_scalar_object(const Json& j) {
  return j.is_object() && j.size() == 2 && j.contains("a") && j.contains("b") && j["a"].is_string() &&
         j["b"].is_string();
}

std::string scalar_text(const Json& j) {
  const Rational a(j["a"].get<std::string>());
  const Rational b(j["b"].get<std::string>());
  if (sgn(b) == 0) return a.get_str();
  // the base is not stored in the object; "sqrt(q)" is filled in by the caller
  std::ostringstream out;
  if (sgn(a) != 0) out << a.get_str() << (sgn(b) < 0 ? " - " : " + ");
  else if (sgn(b) < 0) out << "-";
  const Rational mag = abs(b);
  if (mag != 1) out << (mag.get_den() == 1 ? mag.get_str() : "(" + mag.get_str() + ")") << "*";
  out << "sqrt(q)";
  return out.str();
}

std::string inline_value(const Json& j, int q) {
  if (is_scalar_object(j)) {
    std::string s = scalar_text(j);
    const auto pos = s.find("sqrt(q)");
    if (pos != std::string::npos) s.replace(pos, 7, "sqrt(" + std::to_string(q) + ")");
    return s;
  }
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && (e.is_primitive() || is_scalar_object(e));
    if (flat) {
      std::string s = "[";
      for (std::size_t k = 0; k < j.size(); ++k) s += (k ? ", " : "") + inline_value(j[k], q);
      return s + "]";
    }
  }
  return j.dump();
}

void flatten(const Json& j, const std::string& path, int q, std::ostringstream& out) {
  if (j.is_object() && !is_scalar_object(j)) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, q, out);
    return;
  }
  if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j) flat = flat && (e.is_primitive() || is_scalar_object(e));
    if (!flat) {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], path + "[" + std::to_string(k) + "]", q, out);
      return;
    }
  }
  out << "  " << path << ": " << inline_value(j, q) << "\n";
}

}  // namespace

Json to_json(const ExactScalar& x) { return {{"a", x.a().get_str()}, {"b", x.b().get_str()}}; }

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json vector_json(const ExactMatrix& v) {
  Json out = Json::array();
  for (std::size_t k = 0; k < v.rows(); ++k) out.push_back(to_json(v(k, 0)));
  return out;
}

Json to_json(const std::vector<CheckRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"name", r.name}, {"detail", r.detail}, {"pass", r.pass}});
  return out;
}

Json to_json(const PosetInstance& p) {
  Json ranks = Json::array();
  for (int i = 0; i <= p.N; ++i) ranks.push_back(p.rank_size(i));
  Json vertices = Json::array();
  for (std::size_t v = 0; v < p.size(); ++v) {
    const Vertex& x = p.vertices[v];
    Json u = Json::array();
    Json t = Json::array();
    for (std::size_t r = 0; r < x.U.rows(); ++r) {
      u.push_back(Json(std::vector<int>(x.U.row(r).begin(), x.U.row(r).end())));
      t.push_back(Json(std::vector<int>(x.T.row(r).begin(), x.T.row(r).end())));
    }
    vertices.push_back({{"index", v}, {"dim", x.dim}, {"U", u}, {"T", t}, {"covered_by", p.covers_up[v]}});
  }
  return {{"q", p.q}, {"N", p.N}, {"M", p.M}, {"vertex_count", p.size()}, {"rank_sizes", ranks},
          {"vertices", vertices}};
}

Json to_json(const CountingReport& report) {
  Json ranks = Json::array();
  for (const auto& r : report.ranks) {
    ranks.push_back({{"rank", r.rank},
                     {"expected_size", r.expected_size.get_str()},
                     {"actual_size", r.actual_size},
                     {"expected_down", r.expected_down.get_str()},
                     {"down_range", {r.down_min, r.down_max}},
                     {"expected_up", r.expected_up.get_str()},
                     {"up_range", {r.up_min, r.up_max}}});
  }
  Json failures = Json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"vertex", f.vertex}, {"what", f.what}, {"expected", f.expected}, {"actual", f.actual}});
  }
  return {{"ranks", ranks},
          {"transpose_consistent", report.transpose_consistent},
          {"graded", report.graded},
          {"connected", report.connected},
          {"failures", failures}};
}

Json to_json(const RelationReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"name", r.name}, {"identity", r.identity}, {"degree", r.degree}, {"pass", r.pass}});
  }
  return rows;
}

Json to_json(const Spectrum& spectrum) {
  Json records = Json::array();
  const auto predicted = predicted_dims(spectrum.q, spectrum.N, spectrum.M);
  for (std::size_t k = 0; k < spectrum.entries.size(); ++k) {
    const auto& e = spectrum.entries[k];
    records.push_back({{"index", e.index.str()},
                       {"theta", to_json(e.theta)},
                       {"dim", e.dim},
                       {"predicted_dim", predicted[k].second.get_str()}});
  }
  return records;
}

Json to_json(const BandProfile& profile) {
  return {{"adjacent_iff_nonzero", profile.adjacent_iff_nonzero},
          {"dual_generates_diagonal_algebra", profile.dual_generates_diagonal_algebra},
          {"natural", grid_json(profile, profile.indices)},
          {"integers_first", grid_json(profile, profile.ordering_integers_first)},
          {"halves_first", grid_json(profile, profile.ordering_halves_first)}};
}

Json to_json(const PsiSumReport& report) {
  Json rows = Json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"r", r.r}, {"d", r.d}, {"lhs", r.lhs.get_str()}, {"rhs", r.rhs.get_str()}, {"pass", r.pass}});
  }
  return rows;
}

Json to_json(const ModuleWitness& w) {
  Json basis = Json::array();
  for (const auto& v : w.basis) basis.push_back(vector_json(v));
  return {{"r", w.r}, {"d", w.d}, {"basis", basis}};
}

Json to_json(const LeonardProfile& p) {
  Json theta = Json::array();
  for (const auto& x : p.eigenvalue_sequence) theta.push_back(to_json(x));
  Json dual = Json::array();
  for (const auto& x : p.dual_eigenvalue_sequence) dual.push_back(to_json(x));
  return {{"d", p.d},
          {"t", p.t.str()},
          {"h", to_json(p.h)},
          {"h_star", to_json(p.h_star)},
          {"s", to_json(p.s)},
          {"theta0", to_json(p.theta0)},
          {"theta0_star", to_json(p.theta0_star)},
          {"eigenvalues", theta},
          {"dual_eigenvalues", dual},
          {"bipartite", p.bipartite}};
}

std::string render_table(const Json& doc) {
  std::ostringstream out;
  const Json& params = doc["params"];
  const bool many = params.contains("instances");
  int q = many ? 0 : params["q"].get<int>();
  if (many) {
    out << "instances: " << params["instances"].dump() << "\n";
  } else {
    out << "q=" << q << " N=" << params["N"].get<int>() << " M=" << params["M"].get<int>() << "\n";
  }
  for (const auto& section : doc["sections"]) {
    if (section.contains("params")) q = section["params"]["q"].get<int>();
    out << "[" << (section["pass"].get<bool>() ? "PASS" : "FAIL") << "] " << section["name"].get<std::string>()
        << "\n";
    flatten(section["details"], "", q, out);
  }
  out << "overall: " << (doc["pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace aq
