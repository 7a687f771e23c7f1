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
#ifndef PROBING_FIXTURES_HPP_
#define PROBING_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "probing/constraint_system.hpp"
#include "probing/instance.hpp"
#include "probing/policy_eval.hpp"
#include "probing/random.hpp"
#include "probing/spm.hpp"

namespace probing {

enum class MatroidKind { kPartition, kGraphic, kUniform, kLaminar };

ConstraintSystem random_matroid(std::size_t n, MatroidKind kind, Rng& rng);

// Intersection of k random matroids drawn from kinds (k = 1 returns the
// matroid itself).
ConstraintSystem random_matroid_intersection(
    std::size_t n, int k, const std::vector<MatroidKind>& kinds, Rng& rng);

struct RandomInstanceOptions {
  std::size_t min_size = 4;
  std::size_t max_size = 10;
  int k_in = 1;
  int k_out = 1;
  std::vector<MatroidKind> inner_kinds = {MatroidKind::kPartition,
                                          MatroidKind::kGraphic};
  std::vector<MatroidKind> outer_kinds = {
      MatroidKind::kPartition, MatroidKind::kGraphic, MatroidKind::kUniform,
      MatroidKind::kLaminar};
  bool weighted = false;
  bool deadlines = false;
};

ProbingInstance random_instance(const RandomInstanceOptions& options,
                                Rng& rng);

// Three-dimensional matching with all p = 1: per gadget a blocking element
// t = (a0,b0,c0) and three mutually compatible elements that each share one
// coordinate with t. Dimensions a and b are inner partition matroids, c is
// the outer one. Greedy takes every t, the optimum every other element.
ProbingInstance tightness_instance(std::size_t gadgets = 7);

enum class AppendixOrdering { kWeight, kProbability, kWeightTimesProbability };

// Graph G: vertices u, v and n middle vertices m_i; e_i = (u, m_i),
// f_i = (m_i, v) and one edge g = (u, v), so every {e_i, f_i, g} is a cycle.
// Graph H: the same paths and n^2 parallel (u, v) edges g_j, each closed
// into a cycle by any single path.
struct AppendixFixture {
  std::string name;
  AppendixOrdering ordering;
  std::size_t n = 0;
  ProbingInstance instance;
  std::vector<double> y;  // the fractional solution the baseline rounds
};

AppendixFixture appendix_fixture(AppendixOrdering ordering, std::size_t n = 10);
std::vector<AppendixFixture> load_appendix_fixtures(std::size_t n = 10);

// Elements by the fixture's key descending, ties by index.
std::vector<ElementId> baseline_order(const AppendixFixture& fixture);

// Walks baseline_order and probes each permitted element with probability
// b y_e.
Policy baseline_policy(const AppendixFixture& fixture, double b);

// Independent valuations with random masses on {0..max_value}.
AuctionSpec random_auction(std::size_t agents, std::size_t max_value,
                           ConstraintSystem feasibility, Rng& rng);

// Agents are the edges of the complete bipartite graph K_{left,right},
// numbered l * right + r; feasible sets are matchings.
ConstraintSystem bipartite_matching(std::size_t left, std::size_t right);

}  // namespace probing

#endif  // PROBING_FIXTURES_HPP_
