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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "aq/errors.hpp"
#include "aq/suite.hpp"

namespace {

void print_timings(const aq::SuiteReport& report) {
  for (const auto& s : report.sections) {
    std::fprintf(stderr, "(%d,%d,%d) %-14s %s %.3fs\n", report.q, report.N, report.M, s.name.c_str(),
                 s.pass ? "pass" : "FAIL", s.seconds);
  }
}

int emit(const aq::RunConfig& cfg, const aq::Json& doc) {
  const std::string text = cfg.format == "table" ? aq::render_table(doc) : doc.dump(2) + "\n";
  if (cfg.out.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) {
    std::cerr << "cannot write " << cfg.out << "\n";
    return 2;
  }
  file << text;
  return 0;
}

int run(const aq::RunConfig& cfg) {
  std::vector<aq::SuiteReport> reports;
  if (cfg.all) {
    for (const auto& [q, N, M] : aq::default_instances()) aq::validate(q, N, M, cfg.cap);
    for (const auto& [q, N, M] : aq::default_instances()) {
      reports.push_back(aq::run_command(cfg.command, q, N, M, cfg.cap));
      print_timings(reports.back());
    }
  } else {
    reports.push_back(aq::run_command(cfg.command, cfg.q, cfg.N, cfg.M, cfg.cap));
    print_timings(reports.back());
  }
  const aq::Json doc = cfg.all ? aq::envelope(reports) : aq::envelope(reports.front());
  if (const int code = emit(cfg, doc); code != 0) return code;

  for (const auto& r : reports) {
    if (const aq::Section* bad = r.first_failure()) {
      std::cerr << "FAIL (" << r.q << "," << r.N << "," << r.M << "): first failing section " << bad->name << "\n";
      return 1;
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Attenuated space poset verifier"};
  app.require_subcommand(1);
  aq::RunConfig cfg;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"build", "enumerate the poset and check cover counts"},
      {"verify", "run the full verification suite"},
      {"spectrum", "eigenvalues, eigenspace dimensions and band profile"},
      {"decompose", "module classes, multiplicities and sample witnesses"},
      {"report", "everything, including witness vectors"}};
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--q", cfg.q, "field size (prime)")->capture_default_str();
    sub->add_option("--N", cfg.N, "dimension of the free part")->capture_default_str();
    sub->add_option("--M", cfg.M, "dimension of the attenuating subspace")->capture_default_str();
    sub->add_option("--cap", cfg.cap, "refuse instances with more vertices")->capture_default_str();
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_flag("--all", cfg.all, "run the default instance set");
    sub->callback([&cfg, name = name] { cfg.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run(cfg);
  } catch (const aq::CapacityError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
