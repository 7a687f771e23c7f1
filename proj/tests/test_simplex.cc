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

#include "oracles.hpp"
#include "probing/errors.hpp"
#include "probing/random.hpp"
#include "probing/simplex.hpp"

using namespace probing;

TEST_CASE("textbook program") {
  // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18: optimum 36 at (2, 6)
  LinearProgram lp;
  lp.objective = {3, 5};
  lp.add_row({1, 0}, 4);
  lp.add_row({0, 2}, 12);
  lp.add_row({3, 2}, 18);
  const LpSolution s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(36));
  CHECK(s.x[0] == doctest::Approx(2));
  CHECK(s.x[1] == doctest::Approx(6));
  // strong duality: b . duals = objective
  CHECK(4 * s.duals[0] + 12 * s.duals[1] + 18 * s.duals[2] == doctest::Approx(36));
}

TEST_CASE("unbounded and malformed programs") {
  LinearProgram lp;
  lp.objective = {1, 0};
  lp.add_row({0, 1}, 1);
  CHECK_THROWS_AS(solve_lp(lp), ProbingError);
  LinearProgram bad;
  bad.objective = {1};
  bad.rows = {{1}};
  bad.rhs = {-1};
  CHECK_THROWS_AS(solve_lp(bad), DomainError);
}

TEST_CASE("degenerate program terminates") {
  // Several constraints tight at the origin.
  LinearProgram lp;
  lp.objective = {10, -57, -9, -24};
  lp.add_row({0.5, -5.5, -2.5, 9}, 0);
  lp.add_row({0.5, -1.5, -0.5, 1}, 0);
  lp.add_row({1, 0, 0, 0}, 1);
  const LpSolution s = solve_lp(lp);
  CHECK(s.objective == doctest::Approx(1));
}

TEST_CASE("random programs match vertex enumeration") {
  Rng rng(2024);
  for (int rep = 0; rep < 150; ++rep) {
    const std::size_t n = 2 + rep % 3;
    const std::size_t m = 2 + rep % 4;
    LinearProgram lp;
    for (std::size_t j = 0; j < n; ++j) lp.objective.push_back(uniform01(rng) * 4 - 1);
    for (std::size_t i = 0; i < m; ++i) {
      std::vector<double> row;
      for (std::size_t j = 0; j < n; ++j) row.push_back(uniform01(rng) * 3 - 0.5);
      lp.add_row(row, uniform01(rng) * 5);
    }
    // keep it bounded
    lp.add_row(std::vector<double>(n, 1.0), 10);
    const auto expected = oracle::lp_by_vertices(lp.objective, lp.rows, lp.rhs);
    REQUIRE(expected);
    const LpSolution s = solve_lp(lp);
    CHECK(s.objective == doctest::Approx(*expected).epsilon(1e-9));
    for (std::size_t i = 0; i < lp.rows.size(); ++i) {
      double lhs = 0.0;
      for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i][j] * s.x[j];
      CHECK(lhs <= lp.rhs[i] + 1e-9);
    }
  }
}
