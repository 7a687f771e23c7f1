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

#include <algorithm>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "probing/fixtures.hpp"
#include "probing/lp.hpp"
#include "probing/spm.hpp"

using namespace probing;

namespace {

AuctionSpec single_agent() {
  AuctionSpec spec;
  spec.max_value = 2;
  spec.distributions = {{0.0, 0.5, 0.5}};
  spec.feasibility = ConstraintSystem::Uniform(1, 1);
  return spec;
}

std::vector<AuctionSpec> random_specs(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<AuctionSpec> out;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 2 + i % 4;
    const std::size_t b = 1 + i % 4;
    ConstraintSystem f = i % 3 == 2 ? bipartite_matching(2, 2)
                                    : ConstraintSystem::Uniform(n, 1 + i % 2);
    const std::size_t agents = f.universe_size();
    out.push_back(random_auction(agents, b, std::move(f), rng));
  }
  return out;
}

}  // namespace

TEST_CASE("probing instance of a single agent") {
  const ProbingInstance inst = build_probing_instance(single_agent());
  REQUIRE(inst.size() == 3);
  CHECK(inst.p(0) == 1.0);
  CHECK(inst.p(1) == 1.0);
  CHECK(inst.p(2) == 0.5);
  CHECK(inst.weight(0) == 0.0);
  CHECK(inst.weight(1) == 1.0);
  CHECK(inst.weight(2) == 2.0);
  // one offer per agent outside, one sale per agent inside
  CHECK_FALSE(inst.outer().is_independent(ElementSet(3, {1, 2})));
  CHECK_FALSE(inst.inner().is_independent(ElementSet(3, {1, 2})));
}

TEST_CASE("survival of a point mass is a step") {
  AuctionSpec spec;
  spec.max_value = 4;
  spec.distributions = {{0, 0, 1, 0, 0}};
  spec.feasibility = ConstraintSystem::Free(1);
  for (std::size_t c = 0; c <= 4; ++c) CHECK(spec.survival(0, c) == (c <= 2 ? 1.0 : 0.0));
}

TEST_CASE("both programs on the single agent") {
  const auto spec = single_agent();
  // LP_M reduces to max z2 - z0 with 0 <= z0 <= z1 <= z2 <= 1.
  const auto by_vertices = oracle::lp_by_vertices(
      {-1, 0, 1}, {{1, -1, 0}, {0, 1, -1}, {0, 0, 1}, {0, 0.5, 0.5}}, {0, 0, 1, 1});
  REQUIRE(by_vertices);
  const auto m = solve_lp_m(spec);
  CHECK(m.objective == doctest::Approx(*by_vertices));
  CHECK(m.objective == doctest::Approx(1.0));
  CHECK(solve_lp_p(spec).objective == doctest::Approx(1.0));
  for (std::size_t c = 1; c <= 2; ++c) CHECK(m.z[0][c - 1] <= m.z[0][c] + 1e-12);
}

TEST_CASE("zero valuations give nothing") {
  AuctionSpec spec;
  spec.max_value = 3;
  spec.distributions = {{1, 0, 0, 0}, {1, 0, 0, 0}};
  spec.feasibility = ConstraintSystem::Uniform(2, 1);
  CHECK(solve_lp_m(spec).objective == doctest::Approx(0.0));
  CHECK(solve_lp_p(spec).objective == doctest::Approx(0.0));
  CHECK(build_spm(spec, 1).offers.empty());
}

TEST_CASE("a second identical agent never lowers LP_P") {
  AuctionSpec two = single_agent();
  two.distributions.push_back(two.distributions[0]);
  two.feasibility = ConstraintSystem::Uniform(2, 1);
  CHECK(solve_lp_p(two).objective >= solve_lp_p(single_agent()).objective - 1e-9);
}

TEST_CASE("mechanism shape and revenue examples") {
  const auto spec = single_agent();
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto mech = build_spm(spec, seed);
    REQUIRE(mech.offers.size() <= 1);
    for (const auto& o : mech.offers) CHECK((o.price == 1 || o.price == 2));
  }
  CHECK(spm_revenue_exact({{{0, 0}}}, spec) == 0.0);
  CHECK(spm_revenue_exact({{{0, 2}}}, spec) == doctest::Approx(1.0));
  const auto mc = spm_revenue_monte_carlo({{{0, 2}}}, spec, 100000, 3);
  CHECK(std::abs(mc.mean - 1.0) <= mc.radius);
}

TEST_CASE("programs, mechanisms and revenue on random auctions") {
  Rng rng(5);
  for (const auto& spec : random_specs(12, 77)) {
    const auto m = solve_lp_m(spec);
    const double lp_p = solve_lp_p(spec).objective;
    CHECK(lp_p >= m.objective - 1e-6);
    CHECK(is_lp_m_feasible(spec, m.z, 1e-7));

    const SpmBuilder builder(spec);
    double total = 0.0;
    for (int d = 0; d < 30; ++d) {
      const auto mech = builder.draw(rng);
      std::set<std::size_t> agents;
      for (const auto& o : mech.offers) {
        CHECK(agents.insert(o.agent).second);
        CHECK(o.price > 0);
      }
      total += spm_revenue_exact(mech, spec);
    }
    CHECK(total / 30 >= m.objective / (4.0 * builder.k() + 2.0) - 1e-3);

    // Any posted-price sequence earns at most LP_M.
    for (int d = 0; d < 20; ++d) {
      std::vector<std::size_t> order(spec.agents());
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), rng);
      SpmMechanism mech;
      for (std::size_t i : order) {
        mech.offers.push_back({i, std::uniform_int_distribution<std::size_t>(
                                      0, spec.max_value)(rng)});
      }
      const double exact = spm_revenue_exact(mech, spec);
      CHECK(exact <= m.objective + 1e-9);
      const auto mc = spm_revenue_monte_carlo(mech, spec, 20000, d);
      CHECK(std::abs(mc.mean - exact) <= 4 * mc.radius + 1e-12);
    }
  }
}

TEST_CASE("monotone allocation curves map to LP_P points of equal value") {
  Rng rng(9);
  for (const auto& spec : random_specs(20, 91)) {
    std::vector<std::vector<double>> z(spec.agents());
    for (auto& chain : z) {
      for (std::size_t c = 0; c <= spec.max_value; ++c) chain.push_back(uniform01(rng) * 0.5);
      std::sort(chain.begin(), chain.end());
    }
    if (!is_lp_m_feasible(spec, z)) {
      for (auto& chain : z) {
        for (double& v : chain) v *= 0.25;
      }
    }
    if (!is_lp_m_feasible(spec, z)) continue;
    const auto y = lp_m_to_lp_p(spec, z);
    const ProbingInstance inst = build_probing_instance(spec);
    CHECK(is_lp_feasible(inst, y));
    double value = 0.0;
    for (ElementId e = 0; e < inst.size(); ++e) value += inst.weight(e) * inst.p(e) * y[e];
    CHECK(value == doctest::Approx(lp_m_objective(spec, z)).epsilon(1e-12));
  }
}
