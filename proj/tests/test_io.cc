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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "probing/fixtures.hpp"
#include "probing/io.hpp"

using namespace probing;

namespace {

ParseErrorCode code_of(const std::string& text, ParseOptions options = {}) {
  try {
    parse_instance(text, options);
  } catch (const ParseError& e) {
    return e.code();
  }
  FAIL("document parsed");
  return ParseErrorCode::kSchema;
}

std::string doc(const std::string& elements, const std::string& extra = "") {
  return R"({"schema_version": 1, "elements": )" + elements + extra + "}";
}

}  // namespace

TEST_CASE("minimal document") {
  const auto parsed = parse_instance(doc(R"([{"p": 0.5}])"));
  CHECK(parsed.instance.size() == 1);
  CHECK(parsed.instance.weight(0) == 1.0);
  CHECK(parsed.instance.inner().is_free());
  CHECK(parsed.warnings.empty());
}

TEST_CASE("error codes") {
  CHECK(code_of(doc(R"([{"p": 1.5}])")) == ParseErrorCode::kProbabilityRange);
  CHECK(code_of(R"({"schema_version": 1, "elements": [)") == ParseErrorCode::kSyntax);
  CHECK(code_of(doc(R"([{"p": 0.5}, {"p": 0.5}])",
                    R"(, "inner": {"type": "partition", "parts": [[0, 1], [1]], "capacities": [1, 1]})")) ==
        ParseErrorCode::kPartitionOverlap);
  CHECK(code_of(doc(R"([{"p": 0.5}, {"p": 0.5}, {"p": 0.5}])",
                    R"(, "outer": {"type": "laminar", "sets": [[0, 1], [1, 2]], "capacities": [1, 1]})")) ==
        ParseErrorCode::kLaminarNotNested);
  CHECK(code_of(doc(R"([{"p": 0.5}])", R"(, "inner": {"type": "uniform", "rank": 1, "color": 2})"),
                {true}) == ParseErrorCode::kUnknownField);
  CHECK(code_of(doc(R"([{"p": 0.5}])", R"(, "inner": {"type": "partition", "parts": [[3]], "capacities": [1]})")) ==
        ParseErrorCode::kElementRange);
  CHECK(code_of(doc(R"([{"p": 0.5, "deadline": 0}])")) == ParseErrorCode::kDeadlineRange);
  CHECK(code_of(doc(R"([{"weight": 1}])")) == ParseErrorCode::kSchema);
  CHECK(code_of(R"({"schema_version": 7, "elements": []})") == ParseErrorCode::kSchema);
  CHECK(code_of(doc(R"([{"p": 0.5}, {"p": 0.5}])",
                    R"(, "inner": {"type": "explicit", "sets": [[0, 1]]})")) ==
        ParseErrorCode::kFamilyNotClosed);
}

TEST_CASE("syntax errors carry a line") {
  try {
    parse_instance("{\n  \"schema_version\": 1,\n  \"elements\": [}\n");
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(e.code() == ParseErrorCode::kSyntax);
    CHECK(e.where().rfind("line 3", 0) == 0);
  }
}

TEST_CASE("unknown fields warn in lenient mode") {
  const auto parsed = parse_instance(doc(R"([{"p": 0.5, "note": "x"}])", R"(, "comment": 1)"));
  CHECK(parsed.warnings.size() == 2);
}

TEST_CASE("instances round-trip") {
  Rng rng(3);
  std::vector<ProbingInstance> all;
  for (const auto& f : load_appendix_fixtures(4)) all.push_back(f.instance);
  all.push_back(tightness_instance(3));
  RandomInstanceOptions options;
  options.deadlines = true;
  options.weighted = true;
  options.k_in = 2;
  for (int i = 0; i < 10; ++i) all.push_back(random_instance(options, rng));
  all.push_back(ProbingInstance({{1, 0.5, {}}, {2, 0.25, {}}},
                                ConstraintSystem::Lifted(ConstraintSystem::Uniform(1, 1), {0, 0}),
                                ConstraintSystem::Explicit(2, {ElementSet(2, {0})})));
  for (const auto& inst : all) {
    const std::string text = emit_instance(inst);
    const auto parsed = parse_instance(text, {true});
    CHECK(parsed.instance == inst);
    CHECK(emit_instance(parsed.instance) == text);
  }
}

TEST_CASE("shipped fixture files parse and match their generators") {
  const std::filesystem::path dir = PROBING_DATA_DIR;
  auto read = [&](const char* name) {
    std::ifstream in(dir / name);
    REQUIRE(in);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  };
  for (const auto& f : load_appendix_fixtures(10)) {
    const std::string file = f.name + ".json";
    CHECK(parse_instance(read(file.c_str()), {true}).instance == f.instance);
  }
  CHECK(parse_instance(read("tightness.json"), {true}).instance == tightness_instance(7));
  const auto auction = parse_auction(read("auction-single.json"), {true});
  CHECK(auction.spec.agents() == 1);
  CHECK(auction.spec.max_value == 2);
}

TEST_CASE("auction documents") {
  const auto a = parse_auction(
      R"({"schema_version": 1, "max_value": 2, "distributions": [[0, 0.5, 0.5]],
          "feasibility": {"type": "uniform", "rank": 1}})");
  CHECK(emit_auction(parse_auction(emit_auction(a.spec)).spec) == emit_auction(a.spec));
  auto code = [](const std::string& text) {
    try {
      parse_auction(text);
    } catch (const ParseError& e) {
      return e.code();
    }
    return ParseErrorCode::kSyntax;
  };
  CHECK(code(R"({"schema_version": 1, "max_value": 1, "distributions": [[0.5, 0.4]]})") ==
        ParseErrorCode::kDistributionSum);
  CHECK(code(R"({"schema_version": 1, "max_value": 1,
                 "distributions": [{"type": "normal", "mean": 1}]})") ==
        ParseErrorCode::kContinuousDistribution);
  CHECK(code(R"({"schema_version": 1, "max_value": 1, "distributions": [[-0.5, 1.5]]})") ==
        ParseErrorCode::kProbabilityRange);
}

TEST_CASE("numbers are written with 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2.0");
  CHECK(format_double(1e-5) == "1.0000000000000001e-05");
}
