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
#include "probing/policy_eval.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "probing/errors.hpp"

namespace probing {
namespace {

void check_cap(const ProbingInstance& instance, std::size_t cap,
               const char* what) {
  if (instance.size() > cap) {
    throw CapabilityError(std::string(what) + " over " +
                          std::to_string(instance.size()) +
                          " elements exceeds the cap of " + std::to_string(cap));
  }
}

std::vector<char> independence_table(const ConstraintSystem& sys,
                                     std::size_t n) {
  std::vector<char> table(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < table.size(); ++m) {
    table[m] = sys.is_independent(ElementSet::FromMask(n, m)) ? 1 : 0;
  }
  return table;
}

bool deterministic(const ProbingInstance& instance) {
  return std::all_of(instance.elements().begin(), instance.elements().end(),
                     [](const Element& el) { return el.p == 0.0 || el.p == 1.0; });
}

// value(Q, S) over base-3 codes: digit 0 unprobed, 1 inactive, 2 active.
class AdaptiveSolver {
 public:
  AdaptiveSolver(const ProbingInstance& instance, bool clocked)
      : instance_(instance),
        n_(instance.size()),
        clocked_(clocked),
        inner_ok_(independence_table(instance.inner(), n_)),
        outer_ok_(independence_table(instance.outer(), n_)) {
    std::size_t states = 1;
    pow3_.resize(n_ + 1);
    for (std::size_t e = 0; e <= n_; ++e) {
      pow3_[e] = states;
      if (e < n_) states *= 3;
    }
    memo_.assign(states, std::numeric_limits<double>::quiet_NaN());
  }

  double solve() { return value(0, 0, 0, 0); }

 private:
  double value(std::size_t code, std::uint64_t q, std::uint64_t s, int probes) {
    double& slot = memo_[code];
    if (!std::isnan(slot)) return slot;
    double best = 0.0;
    for (std::size_t e = 0; e < n_; ++e) {
      const std::uint64_t bit = std::uint64_t{1} << e;
      if (q & bit) continue;
      if (!outer_ok_[q | bit] || !inner_ok_[s | bit]) continue;
      const Element& el = instance_.element(e);
      if (el.p == 0.0) continue;
      if (clocked_ && probes + 1 > *el.deadline) continue;
      double v = 0.0;
      if (el.p > 0.0) {
        v += el.p * (el.weight +
                     value(code + 2 * pow3_[e], q | bit, s | bit, probes + 1));
      }
      if (el.p < 1.0) {
        v += (1.0 - el.p) * value(code + pow3_[e], q | bit, s, probes + 1);
      }
      best = std::max(best, v);
    }
    slot = best;
    return best;
  }

  const ProbingInstance& instance_;
  std::size_t n_;
  bool clocked_;
  std::vector<char> inner_ok_;
  std::vector<char> outer_ok_;
  std::vector<std::size_t> pow3_;
  std::vector<double> memo_;
};

}  // namespace

Policy order_policy(std::vector<ElementId> order) {
  return [order = std::move(order)](const ProbingInstance& instance, Rng& rng) {
    ElementSet q(instance.size());
    ElementSet s(instance.size());
    for (ElementId e : order) {
      if (!instance.outer().can_add(q, e) || !instance.inner().can_add(s, e)) {
        continue;
      }
      q.insert(e);
      if (bernoulli(rng, instance.p(e))) s.insert(e);
    }
    return s;
  };
}

PolicyValueReport simulate(const Policy& policy,
                           const ProbingInstance& instance, std::size_t trials,
                           std::uint64_t seed) {
  if (trials == 0) throw DomainError("simulate needs at least one trial");
  MeanAccumulator acc;
  for_each_trial(seed, trials, [&](std::size_t, Rng& rng) {
    acc.add(total_weight(instance, policy(instance, rng)));
  });
  return acc.report();
}

double exact_nonadaptive_value(std::span<const ElementId> order,
                               const ProbingInstance& instance) {
  check_cap(instance, kNonAdaptiveCap, "exact non-adaptive evaluation");
  const std::size_t n = instance.size();
  std::function<double(std::size_t, const ElementSet&, const ElementSet&)> go =
      [&](std::size_t at, const ElementSet& q, const ElementSet& s) {
        for (; at < order.size(); ++at) {
          const ElementId e = order[at];
          if (instance.outer().can_add(q, e) && instance.inner().can_add(s, e)) {
            break;
          }
        }
        if (at == order.size()) return 0.0;
        const ElementId e = order[at];
        const double p = instance.p(e);
        const ElementSet q2 = q.with(e);
        double v = 0.0;
        if (p > 0.0) v += p * (instance.weight(e) + go(at + 1, q2, s.with(e)));
        if (p < 1.0) v += (1.0 - p) * go(at + 1, q2, s);
        return v;
      };
  return go(0, ElementSet(n), ElementSet(n));
}

double optimal_adaptive(const ProbingInstance& instance) {
  if (instance.size() > kAdaptiveCap && deterministic(instance)) {
    return optimal_deterministic(instance);
  }
  check_cap(instance, kAdaptiveCap, "optimal adaptive policy");
  return AdaptiveSolver(instance, false).solve();
}

double optimal_adaptive_deadline(const ProbingInstance& instance) {
  check_cap(instance, kDeadlineAdaptiveCap, "deadline-aware optimal policy");
  if (!instance.has_deadlines()) {
    throw DomainError("deadline oracle needs a deadline on every element");
  }
  return AdaptiveSolver(instance, true).solve();
}

double optimal_deterministic(const ProbingInstance& instance) {
  check_cap(instance, kDeterministicCap, "deterministic optimum");
  if (!deterministic(instance)) {
    throw DomainError("deterministic optimum needs every p in {0, 1}");
  }
  const std::size_t n = instance.size();
  std::vector<ElementId> cand;
  for (ElementId e = 0; e < n; ++e) {
    if (instance.p(e) == 1.0 && instance.weight(e) > 0.0) cand.push_back(e);
  }
  std::stable_sort(cand.begin(), cand.end(), [&](ElementId a, ElementId b) {
    return instance.weight(a) > instance.weight(b);
  });
  auto fits = [&](const ElementSet& s, ElementId e) {
    return instance.inner().can_add(s, e) && instance.outer().can_add(s, e);
  };
  double best = 0.0;
  ElementSet current(n);
  std::function<void(std::size_t, double)> search = [&](std::size_t at,
                                                        double value) {
    best = std::max(best, value);
    double bound = value;
    for (std::size_t i = at; i < cand.size(); ++i) {
      if (fits(current, cand[i])) bound += instance.weight(cand[i]);
    }
    if (bound <= best) return;
    for (std::size_t i = at; i < cand.size(); ++i) {
      const ElementId e = cand[i];
      if (!fits(current, e)) continue;
      current.insert(e);
      search(i + 1, value + instance.weight(e));
      current.erase(e);
    }
  };
  search(0, 0.0);
  return best;
}

}  // namespace probing
