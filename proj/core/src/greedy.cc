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
#include "probing/greedy.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>

#include "probing/errors.hpp"

namespace probing {
namespace {

void check_enumerable(const ProbingInstance& instance) {
  if (instance.size() > kPathEnumerationCap) {
    throw CapabilityError("path enumeration over " +
                          std::to_string(instance.size()) +
                          " elements exceeds the cap of " +
                          std::to_string(kPathEnumerationCap));
  }
}

void check_deadlines(const ProbingInstance& instance) {
  for (ElementId e = 0; e < instance.size(); ++e) {
    const auto& d = instance.element(e).deadline;
    if (!d) {
      throw DomainError("element " + std::to_string(e) + " has no deadline");
    }
    if (*d <= 0) {
      throw DomainError("element " + std::to_string(e) +
                        " has a non-positive deadline");
    }
  }
}

// Walks the order once; decide(e) reports activity of a probed element
// and may fork the walk (used by enumeration).
struct Walker {
  const ProbingInstance& instance;
  const std::vector<ElementId>& order;
  const ConstraintSystem* laminar;  // deadline runs only

  struct State {
    std::size_t next = 0;
    ElementSet q_set;
    int clock = 1;
    PathOutcome path;
  };

  State start() const {
    State s;
    s.q_set = ElementSet(instance.size());
    s.path.chosen = ElementSet(instance.size());
    s.path.skipped_deadline = ElementSet(instance.size());
    return s;
  }

  // Advances to the next element that enters Q and admits it; returns false
  // at the end of the order.
  bool advance(State& s) const {
    while (s.next < order.size()) {
      const ElementId e = order[s.next++];
      if (!instance.outer().can_add(s.q_set, e)) continue;
      if (laminar != nullptr && !laminar->can_add(s.q_set, e)) continue;
      if (!instance.inner().can_add(s.path.chosen, e)) continue;
      s.q_set.insert(e);
      s.path.probed.push_back(e);
      if (laminar != nullptr) {
        if (s.clock <= *instance.element(e).deadline) {
          ++s.clock;
        } else {
          s.path.skipped_deadline.insert(e);
        }
      }
      return true;
    }
    return false;
  }

  PathOutcome run(const std::function<bool(ElementId)>& active) const {
    State s = start();
    while (advance(s)) {
      const ElementId e = s.path.probed.back();
      const double p = instance.p(e);
      if (active(e)) {
        s.path.chosen.insert(e);
        s.path.probability *= p;
      } else {
        s.path.probability *= 1.0 - p;
      }
    }
    return s.path;
  }

  std::vector<PathOutcome> enumerate() const {
    check_enumerable(instance);
    std::vector<PathOutcome> out;
    std::function<void(State)> walk = [&](State s) {
      if (!advance(s)) {
        out.push_back(std::move(s.path));
        return;
      }
      const ElementId e = s.path.probed.back();
      const double p = instance.p(e);
      if (p < 1.0) {
        State miss = s;
        miss.path.probability *= 1.0 - p;
        walk(std::move(miss));
      }
      if (p > 0.0) {
        s.path.chosen.insert(e);
        s.path.probability *= p;
        walk(std::move(s));
      }
    };
    walk(start());
    return out;
  }
};

std::function<bool(ElementId)> from_vector(const ProbingInstance& instance,
                                           const std::vector<bool>& activity) {
  if (activity.size() != instance.size()) {
    throw DomainError("activity vector has the wrong length");
  }
  return [&activity](ElementId e) { return static_cast<bool>(activity[e]); };
}

std::function<bool(ElementId)> from_rng(const ProbingInstance& instance,
                                        Rng& rng) {
  return [&instance, &rng](ElementId e) {
    return bernoulli(rng, instance.p(e));
  };
}

}  // namespace

std::vector<ElementId> greedy_order(const ProbingInstance& instance) {
  std::vector<ElementId> order(instance.size());
  std::iota(order.begin(), order.end(), ElementId{0});
  std::stable_sort(order.begin(), order.end(), [&](ElementId a, ElementId b) {
    return instance.p(a) > instance.p(b);
  });
  return order;
}

PathOutcome run_greedy(const ProbingInstance& instance,
                       const std::vector<bool>& activity) {
  const auto order = greedy_order(instance);
  return Walker{instance, order, nullptr}.run(from_vector(instance, activity));
}

PathOutcome run_greedy(const ProbingInstance& instance, Rng& rng) {
  const auto order = greedy_order(instance);
  return Walker{instance, order, nullptr}.run(from_rng(instance, rng));
}

std::vector<PathOutcome> enumerate_greedy_paths(
    const ProbingInstance& instance) {
  const auto order = greedy_order(instance);
  return Walker{instance, order, nullptr}.enumerate();
}

GreedyValue exact_greedy_value(const ProbingInstance& instance) {
  GreedyValue v;
  for (const PathOutcome& path : enumerate_greedy_paths(instance)) {
    v.chosen_weight += path.probability * total_weight(instance, path.chosen);
    double mass = 0.0;
    for (ElementId e : path.probed) mass += instance.p(e);
    v.probed_mass += path.probability * mass;
  }
  return v;
}

DualCertificate build_dual_certificate(const ProbingInstance& instance,
                                       const PathOutcome& path) {
  const auto& q = path.probed;
  for (std::size_t h = 1; h < q.size(); ++h) {
    if (instance.p(q[h]) > instance.p(q[h - 1])) {
      throw ContractError("probe order is not non-increasing in p");
    }
  }
  DualCertificate cert;
  const ElementSet a = instance.inner().span(path.chosen);
  if (!a.empty()) cert.add_alpha(a, 1.0);

  ElementSet prefix(instance.size());
  for (std::size_t h = 0; h < q.size(); ++h) {
    prefix.insert(q[h]);
    const double next = h + 1 < q.size() ? instance.p(q[h + 1]) : 0.0;
    const double coef = instance.p(q[h]) - next;
    if (coef > 0.0) cert.add_beta(instance.outer().span(prefix), coef);
  }
  return cert;
}

ConstraintSystem build_deadline_laminar(const ProbingInstance& instance) {
  check_deadlines(instance);
  int horizon = 0;
  for (const Element& el : instance.elements()) {
    horizon = std::max(horizon, *el.deadline);
  }
  std::vector<std::vector<ElementId>> sets;
  std::vector<std::size_t> caps;
  for (int t = 1; t <= horizon; ++t) {
    std::vector<ElementId> d;
    for (ElementId e = 0; e < instance.size(); ++e) {
      if (*instance.element(e).deadline <= t) d.push_back(e);
    }
    if (d.empty()) continue;
    sets.push_back(std::move(d));
    caps.push_back(static_cast<std::size_t>(t));
  }
  return ConstraintSystem::Laminar(instance.size(), std::move(sets),
                                   std::move(caps));
}

PathOutcome run_greedy_deadline(const ProbingInstance& instance,
                                const std::vector<bool>& activity) {
  const ConstraintSystem laminar = build_deadline_laminar(instance);
  const auto order = greedy_order(instance);
  return Walker{instance, order, &laminar}.run(
      from_vector(instance, activity));
}

PathOutcome run_greedy_deadline(const ProbingInstance& instance, Rng& rng) {
  const ConstraintSystem laminar = build_deadline_laminar(instance);
  const auto order = greedy_order(instance);
  return Walker{instance, order, &laminar}.run(from_rng(instance, rng));
}

std::vector<PathOutcome> enumerate_deadline_paths(
    const ProbingInstance& instance) {
  const ConstraintSystem laminar = build_deadline_laminar(instance);
  const auto order = greedy_order(instance);
  return Walker{instance, order, &laminar}.enumerate();
}

DeadlineValue exact_deadline_greedy_value(const ProbingInstance& instance) {
  DeadlineValue v;
  for (const PathOutcome& path : enumerate_deadline_paths(instance)) {
    v.realized += path.probability *
                  total_weight(instance, path.chosen - path.skipped_deadline);
    v.coupled += path.probability * total_weight(instance, path.chosen);
  }
  return v;
}

}  // namespace probing
