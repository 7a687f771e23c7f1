// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <doctest.h>

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "probing/fixtures.hpp"
#include "probing/io.hpp"

using namespace probing;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PROBING_DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(CMAKE_TEMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("oracle on a twelve-element instance") {
  Rng rng(4);
  RandomInstanceOptions options;
  options.min_size = options.max_size = 12;
  const std::string path = write_temp("twelve.json", emit_instance(random_instance(options, rng)));
  const Run r = run({"oracle", "--instance", path});
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["metrics"]["optimal_adaptive"]["method"] == "oracle");
  CHECK(report["metrics"]["optimal_adaptive"]["value"].get<double>() > 0.0);
}

TEST_CASE("certify reports per-path verdicts") {
  const Run r = run({"certify", "--instance", data("random-unweighted.json")});
  CHECK(r.code == 0);
  const auto report = nlohmann::json::parse(r.out);
  CHECK(report["metrics"]["paths"].size() > 1);
  CHECK(report["metrics"]["all_paths_certified"] == true);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run({"greedy", "--instance", "/nonexistent.json"}).code == 2);
  const std::string bad = write_temp("bad.json", R"({"schema_version": 1, "elements": [{"p": 1.5}]})");
  const Run r = run({"greedy", "--instance", bad});
  CHECK(r.code == 2);
  CHECK(r.err.find("PROB_RANGE") != std::string::npos);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"acceptance"}).code == 2);  // needs an explicit seed
}

TEST_CASE("reports are deterministic and ratios match their metrics") {
  const std::vector<std::string> args = {"round", "--instance", data("random-weighted.json"),
                                         "--seed", "11", "--trials", "5000"};
  const Run a = run(args);
  const Run b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto report = nlohmann::json::parse(a.out);
  const auto& m = report["metrics"];
  CHECK(m["ratio"].get<double>() ==
        doctest::Approx(m["policy_value"]["value"].get<double>() / m["lp_objective"].get<double>()));

  const Run g = run({"greedy", "--instance", data("random-unweighted.json")});
  const auto gm = nlohmann::json::parse(g.out)["metrics"];
  CHECK(gm["ratio"].get<double>() == doctest::Approx(gm["greedy_value"]["value"].get<double>() /
                                                     gm["optimal_adaptive"]["value"].get<double>()));
}

TEST_CASE("every subcommand runs on the shipped fixtures") {
  const std::string u = data("random-unweighted.json");
  const std::string d = data("random-deadline.json");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"greedy", "--instance", u, "--format", "text"},
           {"greedy-deadline", "--instance", d},
           {"lp", "--instance", u},
           {"round", "--instance", u, "--b", "0.2", "--outer-scheme", "ordered-index"},
           {"simulate", "--instance", u, "--trials", "2000"},
           {"simulate", "--instance", u, "--policy", "rounding", "--trials", "2000"},
           {"verify-cr", "--instance", u, "--side", "outer", "--trials", "2000"},
           {"spm", "--instance", data("auction-single.json"), "--best-of", "5"},
           {"acceptance", "--seed", "1", "--criterion", "3", "--criterion", "9"}}) {
    const Run r = run(args);
    CHECK_MESSAGE(r.code == 0, args[0] << ": " << r.err);
    CHECK(!r.out.empty());
  }
}

TEST_CASE("spm emits a mechanism") {
  const Run r = run({"spm", "--instance", data("auction-single.json")});
  REQUIRE(r.code == 0);
  const auto m = nlohmann::json::parse(r.out)["metrics"];
  CHECK(m["lp_m"].get<double>() == doctest::Approx(1.0));
  CHECK(m["mechanism"]["offers"].size() == 1);
  CHECK(m["revenue"]["value"].get<double>() <= m["lp_m"].get<double>() + 1e-9);
}
