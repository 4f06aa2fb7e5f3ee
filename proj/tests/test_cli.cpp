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

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(AQSPACE_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Result run_stderr(const std::string& args) {
  const std::string cmd = std::string(AQSPACE_CLI) + " " + args + " 2>&1 >/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("verify passes on (2,2,2)") {
  const auto r = run("verify --q 2 --N 2 --M 2");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["params"]["q"] == 2);
  for (const auto& s : doc["sections"]) {
    CHECK(s.contains("name"));
    CHECK(s.contains("details"));
    CHECK(s["pass"] == true);
  }
}

TEST_CASE("usage and capacity errors exit with 2") {
  const auto prime = run_stderr("verify --q 4 --N 2 --M 2");
  CHECK(prime.code == 2);
  CHECK(prime.out.find("q must be prime") != std::string::npos);

  const auto big = run_stderr("verify --q 2 --N 5 --M 5");
  CHECK(big.code == 2);
  CHECK(big.out.find("instance has 71299041 vertices") != std::string::npos);

  CHECK(run("verify --q 2 --N 2 --M 2 --cap 20").code == 2);
  CHECK(run("verify --bogus").code == 2);
  CHECK(run("verify --format xml").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("verify --N 0").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("output is byte-stable") {
  const auto a = run("decompose --q 3 --N 2 --M 1");
  const auto b = run("decompose --q 3 --N 2 --M 1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(run("spectrum --q 2 --N 2 --M 2 --format table").out == run("spectrum --q 2 --N 2 --M 2 --format table").out);
}

TEST_CASE("out path and table format") {
  const std::string path = "cli_test_build.json";
  CHECK(run("build --q 2 --N 1 --M 1 --out " + path).code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  const auto doc = nlohmann::json::parse(text.str());
  CHECK(doc["sections"][0]["details"]["vertex_count"] == 3);
  std::remove(path.c_str());

  const auto table = run("spectrum --q 2 --N 2 --M 2 --format table");
  CHECK(table.code == 0);
  CHECK(table.out.find("2*sqrt(2)") != std::string::npos);
}

TEST_CASE("report includes witnesses") {
  const auto r = run("report --q 2 --N 1 --M 1");
  CHECK(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  bool saw = false;
  for (const auto& s : doc["sections"]) {
    if (s["name"] == "decomposition") {
      saw = true;
      CHECK(s["details"]["witnesses"].size() == 2);
      CHECK(s["details"]["orthogonal_after_pass"] == true);
    }
  }
  CHECK(saw);
}
