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

#include "oracles.hpp"
#include "probing/errors.hpp"
#include "probing/fixtures.hpp"
#include "probing/greedy.hpp"
#include "probing/lp.hpp"
#include "probing/policy_eval.hpp"

using namespace probing;

namespace {

ProbingInstance with_p(std::vector<double> p) {
  std::vector<Element> el;
  for (double v : p) el.push_back({1.0, v, {}});
  const std::size_t n = el.size();
  return ProbingInstance(std::move(el), ConstraintSystem::Free(n), ConstraintSystem::Free(n));
}

ProbingInstance two_elements() {
  return ProbingInstance({{1, 0.9, {}}, {1, 0.5, {}}}, ConstraintSystem::Uniform(2, 1),
                         ConstraintSystem::Uniform(2, 2));
}

ProbingInstance with_deadlines(std::vector<double> p, std::vector<int> d) {
  std::vector<Element> el;
  for (std::size_t i = 0; i < p.size(); ++i) el.push_back({1.0, p[i], d[i]});
  const std::size_t n = el.size();
  return ProbingInstance(std::move(el), ConstraintSystem::Free(n), ConstraintSystem::Free(n));
}

// Clocked greedy written from the definition: the chain "at most t probes
// on elements with deadline <= t" gates Q, late elements join Q and B.
double deadline_value(const ProbingInstance& inst, const std::vector<bool>& active) {
  std::vector<ElementId> order(inst.size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return inst.p(a) > inst.p(b); });
  int horizon = 0;
  for (const auto& el : inst.elements()) horizon = std::max(horizon, *el.deadline);
  ElementSet q(inst.size());
  ElementSet s(inst.size());
  int clock = 1;
  double value = 0.0;
  for (ElementId e : order) {
    if (!inst.outer().is_independent(q.with(e)) || !inst.inner().is_independent(s.with(e))) {
      continue;
    }
    bool chain_ok = true;
    for (int t = 1; t <= horizon; ++t) {
      int count = 0;
      for (ElementId f : q.with(e).members()) count += *inst.element(f).deadline <= t;
      chain_ok = chain_ok && count <= t;
    }
    if (!chain_ok) continue;
    q.insert(e);
    const bool on_time = clock <= *inst.element(e).deadline;
    if (on_time) ++clock;
    if (active[e]) {
      s.insert(e);
      if (on_time) value += inst.weight(e);
    }
  }
  return value;
}

}  // namespace

TEST_CASE("greedy order") {
  CHECK(greedy_order(with_p({0.2, 0.9, 0.5})) == std::vector<ElementId>{1, 2, 0});
  CHECK(greedy_order(with_p({0.4, 0.4, 0.4})) == std::vector<ElementId>{0, 1, 2});
  CHECK(greedy_order(with_p({0.5, 0.5, 0.9})) == std::vector<ElementId>{2, 0, 1});
}

TEST_CASE("greedy runs on the two-element instance") {
  const auto inst = two_elements();
  auto path = run_greedy(inst, {true, false});
  CHECK(path.probed == std::vector<ElementId>{0});
  CHECK(path.chosen == ElementSet(2, {0}));
  path = run_greedy(inst, {false, true});
  CHECK(path.probed == std::vector<ElementId>{0, 1});
  CHECK(path.chosen == ElementSet(2, {1}));
  CHECK(exact_greedy_value(inst).chosen_weight == doctest::Approx(0.95));
}

TEST_CASE("certificate of an empty or single-probe path") {
  const ProbingInstance none({{1, 0.5, {}}}, ConstraintSystem::Uniform(1, 0),
                             ConstraintSystem::Free(1));
  const PathOutcome empty = run_greedy(none, {true});
  CHECK(empty.probed.empty());
  const auto cert = build_dual_certificate(none, empty);
  CHECK(check_dual(cert, none).feasible);
  CHECK(check_dual(cert, none).value == 0.0);

  const ProbingInstance one({{1, 0.7, {}}}, ConstraintSystem::Uniform(1, 1),
                            ConstraintSystem::Uniform(1, 1));
  const auto c1 = build_dual_certificate(one, run_greedy(one, {true}));
  CHECK(c1.beta.at(ElementSet(1, {0})) == doctest::Approx(0.7));
  CHECK(c1.alpha.at(ElementSet(1, {0})) == doctest::Approx(1.0));
}

TEST_CASE("non-greedy path order is a contract violation") {
  const auto inst = two_elements();
  PathOutcome path;
  path.probed = {1, 0};
  path.chosen = ElementSet(2);
  path.skipped_deadline = ElementSet(2);
  CHECK_THROWS_AS(build_dual_certificate(inst, path), ContractError);
}

TEST_CASE("exact greedy value matches activity enumeration") {
  Rng rng(41);
  RandomInstanceOptions options;
  options.max_size = 9;
  options.weighted = true;
  for (int rep = 0; rep < 40; ++rep) {
    options.k_in = 1 + rep % 2;
    options.k_out = 1 + (rep / 2) % 2;
    const auto inst = random_instance(options, rng);
    std::vector<ElementId> order(inst.size());
    std::iota(order.begin(), order.end(), ElementId{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](ElementId a, ElementId b) { return inst.p(a) > inst.p(b); });
    const double expected = oracle::expectation(
        inst, [&](const std::vector<bool>& a) { return oracle::order_value(inst, order, a); });
    CHECK(exact_greedy_value(inst).chosen_weight == doctest::Approx(expected).epsilon(1e-12));
    double mass = 0.0;
    for (const auto& path : enumerate_greedy_paths(inst)) mass += path.probability;
    CHECK(mass == doctest::Approx(1.0));
  }
}

TEST_CASE("path certificates are feasible and within the path bound") {
  Rng rng(43);
  RandomInstanceOptions options;
  for (int rep = 0; rep < 40; ++rep) {
    options.k_in = 1 + rep % 2;
    options.k_out = 1 + (rep / 2) % 2;
    const auto inst = random_instance(options, rng);
    for (const auto& path : enumerate_greedy_paths(inst)) {
      const auto check = check_dual(build_dual_certificate(inst, path), inst);
      double mass = 0.0;
      for (ElementId e : path.probed) mass += inst.p(e);
      CHECK(check.feasible);
      CHECK(check.value <= options.k_in * static_cast<double>(path.chosen.size()) +
                               options.k_out * mass + 1e-9);
    }
  }
}

TEST_CASE("unweighted greedy is within k_in + k_out of the optimum") {
  Rng rng(47);
  RandomInstanceOptions options;
  options.max_size = 8;
  for (int rep = 0; rep < 40; ++rep) {
    options.k_in = 1 + rep % 2;
    options.k_out = 1 + (rep / 2) % 2;
    const auto inst = random_instance(options, rng);
    const double opt = optimal_adaptive(inst);
    const double greedy = exact_greedy_value(inst).chosen_weight;
    CHECK(greedy >= opt / (options.k_in + options.k_out) - 1e-9);
    CHECK(greedy <= opt + 1e-9);
  }
}

TEST_CASE("deadline chain") {
  const auto chain = build_deadline_laminar(with_deadlines({0.5, 0.5}, {1, 2}));
  const auto& lam = std::get<LaminarMatroid>(chain.data());
  REQUIRE(lam.sets.size() == 2);
  CHECK(lam.sets[0] == std::vector<ElementId>{0});
  CHECK(lam.capacities[0] == 1);
  CHECK(lam.sets[1] == std::vector<ElementId>{0, 1});
  CHECK(lam.capacities[1] == 2);

  const auto loose = build_deadline_laminar(with_deadlines({0.5, 0.5, 0.5}, {3, 3, 3}));
  CHECK(loose.is_independent(ElementSet::All(3)));

  const auto tight = build_deadline_laminar(with_deadlines({0.5, 0.5, 0.5}, {1, 1, 3}));
  CHECK_FALSE(tight.is_independent(ElementSet(3, {0, 1})));
  CHECK(tight.is_independent(ElementSet(3, {0, 2})));
  CHECK_THROWS_AS(build_deadline_laminar(with_p({0.5})), DomainError);
}

TEST_CASE("deadline greedy examples") {
  const auto single = with_deadlines({0.4}, {1});
  const auto path = run_greedy_deadline(single, {true});
  CHECK(path.probed == std::vector<ElementId>{0});
  CHECK(path.skipped_deadline.empty());

  const auto pair = with_deadlines({1.0, 1.0}, {1, 1});
  const auto p2 = run_greedy_deadline(pair, {true, true});
  CHECK(p2.probed.size() == 1);
  CHECK(p2.skipped_deadline.empty());
  CHECK(exact_deadline_greedy_value(pair).realized == doctest::Approx(1.0));
}

TEST_CASE("deadline greedy matches a direct simulation and keeps half the mass") {
  Rng rng(53);
  RandomInstanceOptions options;
  options.max_size = 7;
  options.deadlines = true;
  for (int rep = 0; rep < 40; ++rep) {
    options.k_in = 1 + rep % 2;
    options.k_out = 1 + (rep / 2) % 2;
    const auto inst = random_instance(options, rng);
    const double expected = oracle::expectation(
        inst, [&](const std::vector<bool>& a) { return deadline_value(inst, a); });
    const auto value = exact_deadline_greedy_value(inst);
    CHECK(value.realized == doctest::Approx(expected).epsilon(1e-12));
    CHECK(value.realized <= value.coupled + 1e-12);
    for (const auto& path : enumerate_deadline_paths(inst)) {
      double all = 0.0;
      double kept = 0.0;
      for (ElementId e : path.probed) {
        all += inst.p(e);
        if (!path.skipped_deadline.contains(e)) kept += inst.p(e);
      }
      CHECK(all <= 2.0 * kept + 1e-12);
    }
    const double opt = optimal_adaptive_deadline(inst);
    CHECK(value.realized >= opt / (2.0 * (options.k_in + options.k_out + 1)) - 1e-9);
  }
}
