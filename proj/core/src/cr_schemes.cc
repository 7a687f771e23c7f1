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
#include "probing/cr_schemes.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "probing/errors.hpp"

namespace probing {
namespace {

constexpr std::size_t kScoreSamples = 2000;
constexpr double kRadiusZ = 2.58;

std::vector<double> exact_scores(const std::vector<ConstraintSystem>& factors,
                                 const std::vector<ElementId>& t,
                                 const std::vector<double>& q,
                                 std::size_t universe) {
  const std::size_t m = t.size();
  std::vector<double> score(m, 0.0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    ElementSet i(universe);
    double p_in = 1.0;
    double p_out = 1.0;  // over absentees that could have been sampled
    int certain_absent = 0;
    for (std::size_t a = 0; a < m; ++a) {
      if ((mask >> a) & 1u) {
        i.insert(t[a]);
        p_in *= q[a];
      } else if (q[a] < 1.0) {
        p_out *= 1.0 - q[a];
      } else {
        ++certain_absent;
      }
    }
    if (p_in == 0.0) continue;
    // weight[a] = Pr[I] over the unplaced elements other than t[a].
    std::vector<double> weight(m, 0.0);
    bool any = false;
    for (std::size_t a = 0; a < m; ++a) {
      if ((mask >> a) & 1u) continue;
      if (q[a] < 1.0) {
        weight[a] = certain_absent == 0 ? p_in * p_out / (1.0 - q[a]) : 0.0;
      } else {
        weight[a] = certain_absent == 1 ? p_in * p_out : 0.0;
      }
      any = any || weight[a] > 0.0;
    }
    if (!any) continue;
    for (const auto& factor : factors) {
      const ElementSet spanned = factor.span(i);
      for (std::size_t a = 0; a < m; ++a) {
        if (weight[a] > 0.0 && spanned.contains(t[a])) score[a] += weight[a];
      }
    }
  }
  return score;
}

std::vector<double> sampled_scores(const std::vector<ConstraintSystem>& factors,
                                   const std::vector<ElementId>& t,
                                   const std::vector<double>& q,
                                   std::size_t universe, Rng& rng) {
  const std::size_t m = t.size();
  std::vector<double> hits(m, 0.0);
  std::vector<double> absent(m, 0.0);
  for (std::size_t s = 0; s < kScoreSamples; ++s) {
    ElementSet i(universe);
    for (std::size_t a = 0; a < m; ++a) {
      if (bernoulli(rng, q[a])) i.insert(t[a]);
    }
    for (std::size_t a = 0; a < m; ++a) {
      if (!i.contains(t[a])) absent[a] += 1.0;
    }
    for (const auto& factor : factors) {
      const ElementSet spanned = factor.span(i);
      for (std::size_t a = 0; a < m; ++a) {
        if (!i.contains(t[a]) && spanned.contains(t[a])) hits[a] += 1.0;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    hits[a] = absent[a] > 0.0 ? hits[a] / absent[a] : 0.0;
  }
  return hits;
}

void check_point(const ConstraintSystem& system, std::span<const double> z) {
  if (z.size() != system.universe_size()) {
    throw DomainError("fractional point has the wrong length");
  }
  for (double v : z) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw DomainError("fractional point outside [0,1]^V");
    }
  }
}

std::size_t part_count(const PartitionMatroid& p, const ElementSet& i,
                       ElementId e) {
  for (const auto& part : p.parts) {
    if (std::find(part.begin(), part.end(), e) == part.end()) continue;
    std::size_t n = 0;
    for (ElementId f : part) n += i.contains(f) ? 1 : 0;
    return n;
  }
  return 1;
}

}  // namespace

double scheme_target_c(const CrSchemeSpec& spec,
                       const ConstraintSystem& system) {
  const double b = spec.b;
  if (spec.kind == SchemeKind::kPartitionRandom) {
    return (1.0 - std::exp(-b)) / b;
  }
  return 1.0 - static_cast<double>(system.effective_k()) * b;
}

bool is_unit_partition(const ConstraintSystem& system) {
  const auto* p = std::get_if<PartitionMatroid>(&system.data());
  if (p == nullptr) return false;
  return std::all_of(p->capacities.begin(), p->capacities.end(),
                     [](std::size_t c) { return c == 1; });
}

ElementSet resolve_ordered(const ConstraintSystem& system,
                           std::span<const ElementId> order,
                           const ElementSet& i) {
  ElementSet kept(system.universe_size());
  for (ElementId e : order) {
    if (i.contains(e) && system.can_add(kept, e)) kept.insert(e);
  }
  return kept;
}

ElementSet resolve_partition(const ConstraintSystem& system,
                             const ElementSet& i, Rng& rng) {
  if (!is_unit_partition(system)) {
    throw CapabilityError(
        "random-choice resolution needs a partition matroid with unit "
        "capacities; use the ordered scheme instead");
  }
  const auto& p = std::get<PartitionMatroid>(system.data());
  ElementSet kept = i;
  for (const auto& part : p.parts) {
    std::vector<ElementId> present;
    for (ElementId e : part) {
      if (i.contains(e)) present.push_back(e);
    }
    if (present.size() < 2) continue;
    std::sort(present.begin(), present.end());
    const std::size_t pick = std::uniform_int_distribution<std::size_t>(
        0, present.size() - 1)(rng);
    for (std::size_t a = 0; a < present.size(); ++a) {
      if (a != pick) kept.erase(present[a]);
    }
  }
  return kept;
}

std::vector<ElementId> certified_order(const ConstraintSystem& system,
                                       std::span<const double> z, double b,
                                       std::uint64_t seed) {
  check_point(system, z);
  const std::size_t n = system.universe_size();
  const std::vector<ConstraintSystem> factors = system.factors();
  std::vector<ElementId> unplaced;
  std::vector<ElementId> idle;
  for (ElementId e = 0; e < n; ++e) {
    (b * z[e] > 0.0 ? unplaced : idle).push_back(e);
  }
  Rng rng(derive_seed(seed, n));
  std::vector<ElementId> tail;
  while (!unplaced.empty()) {
    std::vector<double> q;
    for (ElementId e : unplaced) q.push_back(std::min(1.0, b * z[e]));
    const std::vector<double> score =
        unplaced.size() <= kCertifiedExactSupport
            ? exact_scores(factors, unplaced, q, n)
            : sampled_scores(factors, unplaced, q, n, rng);
    // Ties go to the larger index, so equal scores keep index order.
    std::size_t pick = 0;
    for (std::size_t a = 1; a < unplaced.size(); ++a) {
      if (score[a] <= score[pick]) pick = a;
    }
    tail.push_back(unplaced[pick]);
    unplaced.erase(unplaced.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  std::vector<ElementId> order(tail.rbegin(), tail.rend());
  order.insert(order.end(), idle.begin(), idle.end());
  return order;
}

ContentionResolver::ContentionResolver(CrSchemeSpec spec,
                                       ConstraintSystem system,
                                       std::vector<double> z,
                                       std::vector<double> weights)
    : spec_(spec), system_(std::move(system)) {
  if (!(spec_.b > 0.0 && spec_.b <= 1.0)) {
    throw ConfigError("scheme scale b must lie in (0,1]");
  }
  check_point(system_, z);
  const std::size_t n = system_.universe_size();
  if (spec_.kind == SchemeKind::kPartitionRandom) {
    if (!is_unit_partition(system_)) {
      throw CapabilityError(
          "random-choice scheme needs a partition matroid with unit "
          "capacities");
    }
    return;
  }
  switch (spec_.order) {
    case OrderPolicy::kCertified:
      fixed_order_ = certified_order(system_, z, spec_.b);
      break;
    case OrderPolicy::kByWeight: {
      if (!weights.empty() && weights.size() != n) {
        throw DomainError("weight vector has the wrong length");
      }
      fixed_order_.resize(n);
      std::iota(fixed_order_.begin(), fixed_order_.end(), ElementId{0});
      if (!weights.empty()) {
        std::stable_sort(fixed_order_.begin(), fixed_order_.end(),
                         [&](ElementId a, ElementId b) {
                           return weights[a] > weights[b];
                         });
      }
      break;
    }
    case OrderPolicy::kByIndex:
      fixed_order_.resize(n);
      std::iota(fixed_order_.begin(), fixed_order_.end(), ElementId{0});
      break;
    case OrderPolicy::kRandom:
      break;
  }
}

std::vector<ElementId> ContentionResolver::order(Rng& rng) const {
  if (spec_.kind != SchemeKind::kOrdered) return {};
  if (spec_.order != OrderPolicy::kRandom) return fixed_order_;
  std::vector<ElementId> order(system_.universe_size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

ElementSet ContentionResolver::resolve(const ElementSet& i, Rng& rng) const {
  if (spec_.kind == SchemeKind::kPartitionRandom) {
    return resolve_partition(system_, i, rng);
  }
  if (spec_.order != OrderPolicy::kRandom) {
    return resolve_ordered(system_, fixed_order_, i);
  }
  return resolve_ordered(system_, order(rng), i);
}

std::vector<double> partition_retention(const ConstraintSystem& system,
                                        std::span<const double> z, double b) {
  check_point(system, z);
  if (!is_unit_partition(system)) {
    throw CapabilityError("retention formula needs a unit-capacity partition");
  }
  const auto& p = std::get<PartitionMatroid>(system.data());
  std::vector<double> out(system.universe_size(), 1.0);
  for (const auto& part : p.parts) {
    for (ElementId e : part) {
      // Distribution of the number of other sampled members.
      std::vector<double> dist{1.0};
      for (ElementId f : part) {
        if (f == e) continue;
        const double q = std::min(1.0, b * z[f]);
        std::vector<double> next(dist.size() + 1, 0.0);
        for (std::size_t k = 0; k < dist.size(); ++k) {
          next[k] += dist[k] * (1.0 - q);
          next[k + 1] += dist[k] * q;
        }
        dist = std::move(next);
      }
      double r = 0.0;
      for (std::size_t k = 0; k < dist.size(); ++k) {
        r += dist[k] / static_cast<double>(k + 1);
      }
      out[e] = r;
    }
  }
  return out;
}

std::vector<RetentionEstimate> verify_scheme(const CrSchemeSpec& spec,
                                             const ConstraintSystem& system,
                                             std::span<const double> z,
                                             std::size_t trials,
                                             std::uint64_t seed) {
  if (trials == 0) throw DomainError("verify_scheme needs at least one trial");
  check_point(system, z);
  for (const auto& factor : system.factors()) {
    if (factor.separate(z)) {
      throw DomainError("fractional point is outside the system's polytope");
    }
  }
  const std::vector<double> zv(z.begin(), z.end());
  const ContentionResolver resolver(spec, system, zv);
  const std::size_t n = system.universe_size();
  std::vector<RetentionEstimate> out(n);
  for_each_trial(seed, trials, [&](std::size_t, Rng& rng) {
    ElementSet i(n);
    for (ElementId e = 0; e < n; ++e) {
      if (zv[e] > 0.0 && bernoulli(rng, spec.b * zv[e])) i.insert(e);
    }
    const ElementSet kept = resolver.resolve(i, rng);
    i.for_each([&](ElementId e) {
      ++out[e].included;
      if (kept.contains(e)) ++out[e].kept;
    });
  });
  for (auto& r : out) {
    if (r.included == 0) continue;
    const double c = static_cast<double>(r.kept) / static_cast<double>(r.included);
    r.estimate = c;
    r.radius = kRadiusZ * std::sqrt(c * (1.0 - c) / static_cast<double>(r.included));
  }
  return out;
}

MonotonicityCheck verify_monotonicity(const CrSchemeSpec& spec,
                                      const ConstraintSystem& system,
                                      std::span<const double> z,
                                      const ElementSet& i1,
                                      const ElementSet& i2, ElementId e,
                                      std::size_t trials, std::uint64_t seed) {
  if (!i1.contains(e) || !i1.is_subset_of(i2)) {
    throw DomainError("monotonicity check needs e in I1 and I1 within I2");
  }
  MonotonicityCheck out;
  if (spec.kind == SchemeKind::kPartitionRandom) {
    if (!is_unit_partition(system)) {
      throw CapabilityError("random-choice scheme needs a unit partition");
    }
    const auto& p = std::get<PartitionMatroid>(system.data());
    out.p_small = 1.0 / static_cast<double>(part_count(p, i1, e));
    out.p_large = 1.0 / static_cast<double>(part_count(p, i2, e));
    out.holds = out.p_small >= out.p_large;
    return out;
  }
  const std::vector<double> zv(z.begin(), z.end());
  const ContentionResolver resolver(spec, system, zv);
  if (spec.order != OrderPolicy::kRandom) {
    Rng unused(seed);
    out.p_small = resolver.resolve(i1, unused).contains(e) ? 1.0 : 0.0;
    out.p_large = resolver.resolve(i2, unused).contains(e) ? 1.0 : 0.0;
    out.holds = out.p_small >= out.p_large;
    return out;
  }
  if (trials == 0) throw DomainError("monotonicity check needs trials");
  std::size_t small = 0;
  std::size_t large = 0;
  for_each_trial(seed, trials, [&](std::size_t, Rng& rng) {
    const std::vector<ElementId> order = resolver.order(rng);
    if (resolve_ordered(system, order, i1).contains(e)) ++small;
    if (resolve_ordered(system, order, i2).contains(e)) ++large;
  });
  const double t = static_cast<double>(trials);
  out.p_small = static_cast<double>(small) / t;
  out.p_large = static_cast<double>(large) / t;
  const double r1 = kRadiusZ * std::sqrt(out.p_small * (1.0 - out.p_small) / t);
  const double r2 = kRadiusZ * std::sqrt(out.p_large * (1.0 - out.p_large) / t);
  out.slack = 3.0 * std::hypot(r1, r2);
  out.holds = out.p_small >= out.p_large - out.slack;
  return out;
}

}  // namespace probing
