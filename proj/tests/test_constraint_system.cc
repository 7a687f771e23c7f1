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
#include "probing/constraint_system.hpp"
#include "probing/errors.hpp"
#include "probing/fixtures.hpp"

using namespace probing;

namespace {

ConstraintSystem triangle() { return ConstraintSystem::Graphic(3, {{0, 1}, {1, 2}, {0, 2}}); }

// Rows {0,1},{2,3} and columns {0,2},{1,3} of a 2x2 grid of edges.
ConstraintSystem grid_matching() {
  return ConstraintSystem::Intersection(
      {ConstraintSystem::Partition(4, {{0, 1}, {2, 3}}, {1, 1}),
       ConstraintSystem::Partition(4, {{0, 2}, {1, 3}}, {1, 1})});
}

// Matchings of a graph as an explicit family over its edges.
ConstraintSystem matchings(std::size_t vertices,
                           const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  const std::size_t n = edges.size();
  std::vector<ElementSet> family;
  for (std::uint64_t m = 0; m < (1ull << n); ++m) {
    std::vector<int> degree(vertices, 0);
    bool ok = true;
    for (std::size_t e = 0; e < n; ++e) {
      if (!((m >> e) & 1u)) continue;
      ok = ok && ++degree[edges[e].first] <= 1 && ++degree[edges[e].second] <= 1;
    }
    if (ok) family.push_back(ElementSet::FromMask(n, m));
  }
  return ConstraintSystem::Explicit(n, family);
}

std::vector<ConstraintSystem> random_systems(std::size_t count, std::size_t n) {
  Rng rng(7);
  std::vector<ConstraintSystem> out;
  const MatroidKind kinds[] = {MatroidKind::kPartition, MatroidKind::kGraphic,
                               MatroidKind::kUniform, MatroidKind::kLaminar};
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_matroid(n, kinds[i % 4], rng));
    if (i % 3 == 0) {
      out.push_back(random_matroid_intersection(n, 2, {MatroidKind::kPartition,
                                                       MatroidKind::kGraphic}, rng));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("independence examples") {
  CHECK(ConstraintSystem::Uniform(4, 2).is_independent(ElementSet(4)));
  CHECK_FALSE(triangle().is_independent(ElementSet(3, {0, 1, 2})));
  const auto part = ConstraintSystem::Partition(3, {{0, 1}, {2}}, {1, 1});
  CHECK(part.is_independent(ElementSet(3, {0, 2})));
  CHECK_FALSE(part.is_independent(ElementSet(3, {0, 1})));
}

TEST_CASE("rank examples") {
  CHECK(ConstraintSystem::Uniform(5, 3).rank(ElementSet::All(5)) == 3);
  const auto path = ConstraintSystem::Graphic(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(path.rank(ElementSet::All(3)) == 3);
  CHECK(grid_matching().rank(ElementSet::All(4)) == 2);
  CHECK(oracle::rank(grid_matching(), ElementSet::All(4)) == 2);
}

TEST_CASE("span examples") {
  const auto loops = ConstraintSystem::Graphic(2, {{0, 0}, {0, 1}});
  CHECK(loops.span(ElementSet(2)).members() == std::vector<ElementId>{0});
  CHECK(triangle().span(ElementSet(3, {0, 1})) == ElementSet::All(3));
  const auto part = ConstraintSystem::Partition(5, {{0, 1, 2}, {3, 4}}, {1, 1});
  CHECK(part.span(ElementSet(5, {3})) == ElementSet(5, {3, 4}));
}

TEST_CASE("separation examples") {
  const std::vector<double> x = {0.6, 0.6};
  auto w = ConstraintSystem::Uniform(2, 1).separate(x);
  REQUIRE(w);
  CHECK(w->members == ElementSet::All(2));
  CHECK(w->value == doctest::Approx(1.2));
  CHECK(w->bound == 1.0);

  const auto part = ConstraintSystem::Partition(4, {{0, 1}, {2, 3}}, {1, 1});
  const std::vector<double> ok = {0.5, 0.5, 0.3, 0.7};
  CHECK_FALSE(part.separate(ok));

  const std::vector<double> tri = {0.7, 0.7, 0.7};
  w = triangle().separate(tri);
  REQUIRE(w);
  CHECK(w->members == ElementSet::All(3));
  CHECK(w->value == doctest::Approx(2.1));
  CHECK(w->bound == 2.0);
}

TEST_CASE("k parameter") {
  CHECK(ConstraintSystem::Uniform(3, 2).k_parameter() == 1);
  const auto p = ConstraintSystem::Partition(3, {{0, 1, 2}}, {1});
  CHECK(ConstraintSystem::Intersection({p, p, p}).k_parameter() == 3);
  // A path on four vertices: the middle edge against both outer edges.
  CHECK(matchings(4, {{0, 1}, {1, 2}, {2, 3}}).k_parameter() == 2);
  // Every matching of a triangle is a single edge, a rank-1 uniform matroid.
  CHECK(matchings(3, {{0, 1}, {1, 2}, {0, 2}}).k_parameter() == 1);
  CHECK(ConstraintSystem::Free(4).effective_k() == 0);
  CHECK(ConstraintSystem::Free(4).k_parameter() == 1);
}

TEST_CASE("structural validation") {
  CHECK_THROWS_AS(ConstraintSystem::Partition(3, {{0, 1}, {1, 2}}, {1, 1}), DomainError);
  CHECK_THROWS_AS(ConstraintSystem::Laminar(3, {{0, 1}, {1, 2}}, {1, 1}), DomainError);
  CHECK_NOTHROW(ConstraintSystem::Laminar(3, {{0, 1}, {0, 1, 2}, {2}}, {1, 2, 1}));
  CHECK_THROWS_AS(ConstraintSystem::Explicit(2, {ElementSet(2, {0, 1})}), DomainError);
  CHECK_THROWS_AS(ConstraintSystem::Graphic(2, {{0, 2}}), DomainError);
  const std::vector<double> bad = {1.5, 0.0};
  CHECK_THROWS_AS(ConstraintSystem::Free(2).separate(bad), DomainError);
}

TEST_CASE("graphic independence matches a forest check") {
  Rng rng(11);
  for (int rep = 0; rep < 20; ++rep) {
    const auto g = random_matroid(7, MatroidKind::kGraphic, rng);
    const auto& data = std::get<GraphicMatroid>(g.data());
    for (std::uint64_t m = 0; m < 128; ++m) {
      const ElementSet s = ElementSet::FromMask(7, m);
      CHECK(g.is_independent(s) == oracle::is_forest(data.num_vertices, data.edges, s));
    }
  }
}

TEST_CASE("rank, span and can_add agree with brute force") {
  for (const auto& system : random_systems(16, 7)) {
    for (std::uint64_t m = 0; m < 128; m += 3) {
      const ElementSet s = ElementSet::FromMask(7, m);
      const std::size_t r = oracle::rank(system, s);
      CHECK(system.rank(s) == r);
      if (!system.is_matroid()) continue;
      // span(s): elements whose addition keeps the rank
      for (ElementId e = 0; e < 7; ++e) {
        CHECK(system.span(s).contains(e) == (oracle::rank(system, s.with(e)) == r));
      }
    }
    for (std::uint64_t m = 0; m < 128; ++m) {
      const ElementSet s = ElementSet::FromMask(7, m);
      if (!system.is_independent(s)) continue;
      for (ElementId e = 0; e < 7; ++e) {
        if (s.contains(e)) continue;
        CHECK(system.can_add(s, e) == system.is_independent(s.with(e)));
      }
    }
  }
}

TEST_CASE("matroid axioms: downward closure and exchange") {
  Rng rng(5);
  for (int rep = 0; rep < 12; ++rep) {
    const auto system = random_matroid(6, static_cast<MatroidKind>(rep % 4), rng);
    for (std::uint64_t a = 0; a < 64; ++a) {
      const ElementSet sa = ElementSet::FromMask(6, a);
      if (!system.is_independent(sa)) continue;
      for (ElementId e : sa.members()) CHECK(system.is_independent(sa.without(e)));
      for (std::uint64_t b = 0; b < 64; ++b) {
        const ElementSet sb = ElementSet::FromMask(6, b);
        if (sb.size() <= sa.size() || !system.is_independent(sb)) continue;
        bool exchange = false;
        for (ElementId e : (sb - sa).members()) {
          exchange = exchange || system.is_independent(sa.with(e));
        }
        CHECK(exchange);
      }
    }
  }
}

TEST_CASE("separation finds a violated set exactly when one exists") {
  Rng rng(3);
  for (const auto& system : random_systems(12, 6)) {
    for (int rep = 0; rep < 10; ++rep) {
      std::vector<double> x(6);
      for (double& v : x) v = uniform01(rng) * 0.8;
      bool violated = false;
      for (const auto& member : system.factors()) {
        for (std::uint64_t m = 1; m < 64; ++m) {
          const ElementSet s = ElementSet::FromMask(6, m);
          double sum = 0.0;
          for (ElementId e : s.members()) sum += x[e];
          violated = violated || sum > oracle::rank(member, s) + 1e-9;
        }
      }
      const auto w = system.separate(x);
      CHECK(static_cast<bool>(w) == violated);
      if (w) {
        double sum = 0.0;
        for (ElementId e : w->members.members()) sum += x[e];
        CHECK(sum == doctest::Approx(w->value));
        CHECK(w->value > w->bound + 1e-9);
      }
    }
  }
}

TEST_CASE("lifted systems make copies parallel") {
  const auto base = ConstraintSystem::Uniform(2, 1);
  const auto lifted = ConstraintSystem::Lifted(base, {0, 0, 1, 1});
  CHECK(lifted.is_independent(ElementSet(4, {0})));
  CHECK_FALSE(lifted.is_independent(ElementSet(4, {0, 1})));
  CHECK_FALSE(lifted.is_independent(ElementSet(4, {0, 2})));
  const auto wide = ConstraintSystem::Lifted(ConstraintSystem::Free(2), {0, 0, 1, 1});
  CHECK(wide.is_independent(ElementSet(4, {1, 2})));
  CHECK_FALSE(wide.is_independent(ElementSet(4, {2, 3})));
  CHECK(wide.rank(ElementSet::All(4)) == 2);
  const std::vector<double> x = {0.5, 0.6, 0.2, 0.2};
  const auto w = wide.separate(x);
  REQUIRE(w);
  CHECK(w->members == ElementSet(4, {0, 1}));
}
