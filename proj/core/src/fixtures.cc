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
#include "probing/fixtures.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <utility>

#include "probing/errors.hpp"

namespace probing {
namespace {

std::size_t uniform_int(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

double grid(double v, double step) { return std::round(v / step) * step; }

// Random blocks over the elements; some elements stay outside every block.
std::vector<std::vector<ElementId>> random_blocks(std::size_t n, Rng& rng) {
  const std::size_t m = uniform_int(rng, 1, std::max<std::size_t>(1, n / 2));
  std::vector<std::vector<ElementId>> blocks(m);
  for (ElementId e = 0; e < n; ++e) {
    if (uniform01(rng) < 0.15) continue;
    blocks[uniform_int(rng, 0, m - 1)].push_back(e);
  }
  std::erase_if(blocks, [](const auto& b) { return b.empty(); });
  return blocks;
}

std::size_t random_cap(Rng& rng) { return uniform01(rng) < 0.65 ? 1 : 2; }

}  // namespace

ConstraintSystem random_matroid(std::size_t n, MatroidKind kind, Rng& rng) {
  switch (kind) {
    case MatroidKind::kPartition: {
      auto parts = random_blocks(n, rng);
      std::vector<std::size_t> caps;
      for (std::size_t i = 0; i < parts.size(); ++i) caps.push_back(random_cap(rng));
      return ConstraintSystem::Partition(n, std::move(parts), std::move(caps));
    }
    case MatroidKind::kGraphic: {
      const std::size_t vertices = uniform_int(rng, 3, 5);
      std::vector<std::pair<std::size_t, std::size_t>> edges;
      for (ElementId e = 0; e < n; ++e) {
        const std::size_t a = uniform_int(rng, 0, vertices - 1);
        std::size_t b = uniform_int(rng, 0, vertices - 2);
        if (b >= a) ++b;
        edges.emplace_back(a, b);
      }
      return ConstraintSystem::Graphic(vertices, std::move(edges));
    }
    case MatroidKind::kUniform:
      return ConstraintSystem::Uniform(n, uniform_int(rng, 1, std::max<std::size_t>(1, n - 1)));
    case MatroidKind::kLaminar: {
      auto sets = random_blocks(n, rng);
      std::vector<std::size_t> caps;
      for (std::size_t i = 0; i < sets.size(); ++i) caps.push_back(random_cap(rng));
      if (sets.size() >= 2) {
        std::vector<ElementId> top;
        std::size_t top_cap = 0;
        for (std::size_t i = 0; i < (sets.size() + 1) / 2; ++i) {
          top.insert(top.end(), sets[i].begin(), sets[i].end());
          top_cap += caps[i];
        }
        sets.push_back(std::move(top));
        caps.push_back(uniform_int(rng, 1, top_cap));
      }
      return ConstraintSystem::Laminar(n, std::move(sets), std::move(caps));
    }
  }
  throw DomainError("unknown matroid kind");
}

ConstraintSystem random_matroid_intersection(
    std::size_t n, int k, const std::vector<MatroidKind>& kinds, Rng& rng) {
  if (k < 1 || kinds.empty()) throw DomainError("need k >= 1 and some kinds");
  std::vector<ConstraintSystem> members;
  for (int j = 0; j < k; ++j) {
    members.push_back(
        random_matroid(n, kinds[uniform_int(rng, 0, kinds.size() - 1)], rng));
  }
  if (k == 1) return members.front();
  return ConstraintSystem::Intersection(std::move(members));
}

ProbingInstance random_instance(const RandomInstanceOptions& options,
                                Rng& rng) {
  const std::size_t n = uniform_int(rng, options.min_size, options.max_size);
  std::vector<Element> elements(n);
  for (Element& el : elements) {
    el.p = std::clamp(grid(0.05 + 0.95 * uniform01(rng), 0.05), 0.05, 1.0);
    el.weight = options.weighted ? grid(0.5 + 9.5 * uniform01(rng), 0.25) : 1.0;
    if (options.deadlines) el.deadline = static_cast<int>(uniform_int(rng, 1, n));
  }
  auto inner =
      random_matroid_intersection(n, options.k_in, options.inner_kinds, rng);
  auto outer =
      random_matroid_intersection(n, options.k_out, options.outer_kinds, rng);
  return ProbingInstance(std::move(elements), std::move(inner), std::move(outer));
}

ProbingInstance tightness_instance(std::size_t gadgets) {
  // Coordinates are (gadget, slot) with slot in {0, 1, 2} per dimension.
  struct Coord {
    std::size_t a, b, c;
  };
  const Coord shape[4] = {{0, 0, 0}, {0, 1, 1}, {1, 0, 2}, {2, 2, 0}};
  const std::size_t n = 4 * gadgets;
  std::vector<std::vector<ElementId>> dim_a(3 * gadgets);
  std::vector<std::vector<ElementId>> dim_b(3 * gadgets);
  std::vector<std::vector<ElementId>> dim_c(3 * gadgets);
  for (std::size_t g = 0; g < gadgets; ++g) {
    for (std::size_t j = 0; j < 4; ++j) {
      const ElementId e = 4 * g + j;
      dim_a[3 * g + shape[j].a].push_back(e);
      dim_b[3 * g + shape[j].b].push_back(e);
      dim_c[3 * g + shape[j].c].push_back(e);
    }
  }
  auto partition = [&](std::vector<std::vector<ElementId>> parts) {
    std::erase_if(parts, [](const auto& p) { return p.empty(); });
    std::vector<std::size_t> caps(parts.size(), 1);
    return ConstraintSystem::Partition(n, std::move(parts), std::move(caps));
  };
  auto inner = ConstraintSystem::Intersection(
      {partition(std::move(dim_a)), partition(std::move(dim_b))});
  auto outer = partition(std::move(dim_c));
  return ProbingInstance(std::vector<Element>(n, Element{1.0, 1.0, {}}),
                         std::move(inner), std::move(outer));
}

AppendixFixture appendix_fixture(AppendixOrdering ordering, std::size_t n) {
  if (n == 0) throw DomainError("appendix fixtures need n >= 1");
  constexpr std::size_t u = 0;
  constexpr std::size_t v = 1;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.emplace_back(u, 2 + i);  // e_i
    edges.emplace_back(2 + i, v);  // f_i
  }
  const std::size_t paths = edges.size();
  const std::size_t vertices = n + 2;

  AppendixFixture f{"", ordering, n,
                    ProbingInstance({}, ConstraintSystem::Free(0),
                                    ConstraintSystem::Free(0)),
                    {}};
  std::vector<Element> elements;
  switch (ordering) {
    case AppendixOrdering::kWeight:
    case AppendixOrdering::kProbability: {
      edges.emplace_back(u, v);  // g
      const bool by_weight = ordering == AppendixOrdering::kWeight;
      const double big_m = 100.0;
      const double eps = 1e-5;
      const double big_l = 1e5;
      for (std::size_t i = 0; i < paths; ++i) {
        elements.push_back(by_weight ? Element{big_m, eps, {}}
                                     : Element{1.0, 1.0, {}});
      }
      elements.push_back(by_weight ? Element{1.0, 1.0, {}}
                                   : Element{big_l, 0.5, {}});
      f.name = by_weight ? "appendix-weight" : "appendix-probability";
      f.y.assign(paths, 0.5);
      f.y.push_back(1.0);
      const std::size_t m = elements.size();
      f.instance = ProbingInstance(
          std::move(elements), ConstraintSystem::Free(m),
          ConstraintSystem::Graphic(vertices, std::move(edges)));
      break;
    }
    case AppendixOrdering::kWeightTimesProbability: {
      const std::size_t big_n = n * n;
      for (std::size_t j = 0; j < big_n; ++j) edges.emplace_back(u, v);  // g_j
      for (std::size_t i = 0; i < paths; ++i) {
        elements.push_back({2.0, 1.0 / 3.0, {}});
      }
      for (std::size_t j = 0; j < big_n; ++j) {
        elements.push_back({static_cast<double>(big_n),
                            1.0 / (3.0 * static_cast<double>(big_n)), {}});
      }
      f.name = "appendix-weight-times-probability";
      const std::size_t m = elements.size();
      f.y.assign(m, 1.0);
      f.instance = ProbingInstance(
          std::move(elements),
          ConstraintSystem::Graphic(vertices, std::move(edges)),
          ConstraintSystem::Free(m));
      break;
    }
  }
  return f;
}

std::vector<AppendixFixture> load_appendix_fixtures(std::size_t n) {
  return {appendix_fixture(AppendixOrdering::kWeight, n),
          appendix_fixture(AppendixOrdering::kProbability, n),
          appendix_fixture(AppendixOrdering::kWeightTimesProbability, n)};
}

std::vector<ElementId> baseline_order(const AppendixFixture& fixture) {
  const ProbingInstance& inst = fixture.instance;
  auto key = [&](ElementId e) {
    switch (fixture.ordering) {
      case AppendixOrdering::kWeight:
        return inst.weight(e);
      case AppendixOrdering::kProbability:
        return inst.p(e);
      case AppendixOrdering::kWeightTimesProbability:
        return inst.weight(e) * inst.p(e);
    }
    return 0.0;
  };
  std::vector<ElementId> order(inst.size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](ElementId a, ElementId b) { return key(a) > key(b); });
  return order;
}

Policy baseline_policy(const AppendixFixture& fixture, double b) {
  return [order = baseline_order(fixture), y = fixture.y, b](
             const ProbingInstance& instance, Rng& rng) {
    ElementSet q(instance.size());
    ElementSet s(instance.size());
    for (ElementId e : order) {
      if (!instance.outer().can_add(q, e) || !instance.inner().can_add(s, e)) {
        continue;
      }
      if (!bernoulli(rng, b * y[e])) continue;
      q.insert(e);
      if (bernoulli(rng, instance.p(e))) s.insert(e);
    }
    return s;
  };
}

AuctionSpec random_auction(std::size_t agents, std::size_t max_value,
                           ConstraintSystem feasibility, Rng& rng) {
  AuctionSpec spec;
  spec.max_value = max_value;
  spec.feasibility = std::move(feasibility);
  for (std::size_t i = 0; i < agents; ++i) {
    std::vector<double> mass(max_value + 1);
    double total = 0.0;
    for (double& m : mass) {
      m = uniform01(rng) < 0.25 ? 0.0 : uniform01(rng);
      total += m;
    }
    if (total == 0.0) {
      mass.back() = 1.0;
      total = 1.0;
    }
    double assigned = 0.0;
    for (std::size_t c = 0; c < max_value; ++c) {
      mass[c] /= total;
      assigned += mass[c];
    }
    mass[max_value] = std::max(0.0, 1.0 - assigned);
    spec.distributions.push_back(std::move(mass));
  }
  spec.validate();
  return spec;
}

ConstraintSystem bipartite_matching(std::size_t left, std::size_t right) {
  const std::size_t n = left * right;
  std::vector<std::vector<ElementId>> by_left(left);
  std::vector<std::vector<ElementId>> by_right(right);
  for (std::size_t l = 0; l < left; ++l) {
    for (std::size_t r = 0; r < right; ++r) {
      by_left[l].push_back(l * right + r);
      by_right[r].push_back(l * right + r);
    }
  }
  return ConstraintSystem::Intersection(
      {ConstraintSystem::Partition(n, std::move(by_left),
                                   std::vector<std::size_t>(left, 1)),
       ConstraintSystem::Partition(n, std::move(by_right),
                                   std::vector<std::size_t>(right, 1))});
}

}  // namespace probing
