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
#include "probing/rounding.hpp"

#include <functional>
#include <string>
#include <utility>

#include "probing/errors.hpp"
#include "probing/greedy.hpp"

namespace probing {
namespace {

CrSchemeSpec with_b(CrSchemeSpec spec, double b) {
  spec.b = b;
  return spec;
}

template <class Active>
Execution execute_with(const NonAdaptivePolicy& policy,
                       const ProbingInstance& instance, Active&& active) {
  Execution out{ElementSet(instance.size()), ElementSet(instance.size())};
  for (ElementId e : policy.probe_sequence) {
    if (!instance.inner().can_add(out.chosen, e)) continue;
    out.probed.insert(e);
    if (active(e)) out.chosen.insert(e);
  }
  return out;
}

}  // namespace

RoundingConfig default_rounding_config(const ProbingInstance& instance) {
  RoundingConfig config;
  const int k = instance.inner().effective_k() + instance.outer().effective_k();
  config.b = k == 0 ? 1.0 : 1.0 / (2.0 * k);
  if (is_unit_partition(instance.outer())) {
    config.outer_scheme.kind = SchemeKind::kPartitionRandom;
  }
  return config;
}

double rounding_guarantee(const ProbingInstance& instance,
                          const RoundingConfig& config) {
  if (config.inner_scheme.kind != SchemeKind::kOrdered) {
    throw ConfigError("the inner scheme must be an ordered scheme");
  }
  if (!(config.b > 0.0 && config.b <= 1.0)) {
    throw ConfigError("rounding scale b must lie in (0,1]");
  }
  const double c_out =
      scheme_target_c(with_b(config.outer_scheme, config.b), instance.outer());
  const double c_in =
      scheme_target_c(with_b(config.inner_scheme, config.b), instance.inner());
  const double g = config.b * (c_out + c_in - 1.0);
  if (!(g > 0.0)) {
    throw ConfigError("b (c_out + c_in - 1) = " + std::to_string(g) +
                      " is not positive");
  }
  return g;
}

Rounder::Rounder(const ProbingInstance& instance,
                 const FractionalSolution& solution, RoundingConfig config)
    : instance_(instance),
      y_(solution.y),
      config_(config),
      outer_(with_b(config.outer_scheme, config.b), instance.outer(),
             solution.y),
      inner_(with_b(config.inner_scheme, config.b), instance.inner(),
             solution.x,
             [&] {
               std::vector<double> w;
               for (const Element& el : instance.elements()) {
                 w.push_back(el.weight);
               }
               return w;
             }()),
      guarantee_(rounding_guarantee(instance, config)) {
  if (y_.size() != instance_.size() || solution.x.size() != instance_.size()) {
    throw DomainError("fractional solution has the wrong length");
  }
}

NonAdaptivePolicy Rounder::round(Rng& rng) const {
  ElementSet sampled(instance_.size());
  for (ElementId e = 0; e < instance_.size(); ++e) {
    if (y_[e] > 0.0 && bernoulli(rng, config_.b * y_[e])) sampled.insert(e);
  }
  const ElementSet survivors = outer_.resolve(sampled, rng);
  NonAdaptivePolicy policy;
  for (ElementId e : inner_.order(rng)) {
    if (survivors.contains(e)) policy.probe_sequence.push_back(e);
  }
  return policy;
}

std::vector<double> Rounder::exact_marginals() const {
  if (config_.inner_scheme.order == OrderPolicy::kRandom ||
      (config_.outer_scheme.kind == SchemeKind::kOrdered &&
       config_.outer_scheme.order == OrderPolicy::kRandom)) {
    throw CapabilityError("exact marginals need fixed scheme orders");
  }
  const std::size_t n = instance_.size();
  std::vector<ElementId> support;
  for (ElementId e = 0; e < n; ++e) {
    if (y_[e] > 0.0) support.push_back(e);
  }
  if (support.size() > kPathEnumerationCap) {
    throw CapabilityError("exact marginals over " +
                          std::to_string(support.size()) +
                          " sampled elements exceed the cap of " +
                          std::to_string(kPathEnumerationCap));
  }
  Rng unused(config_.seed);
  const std::vector<ElementId> sigma = inner_.order(unused);
  std::vector<double> marginal(n, 0.0);

  std::function<void(const std::vector<ElementId>&, std::size_t,
                     const ElementSet&, double)>
      activity = [&](const std::vector<ElementId>& seq, std::size_t at,
                     const ElementSet& chosen, double prob) {
        for (; at < seq.size(); ++at) {
          const ElementId e = seq[at];
          if (!instance_.inner().can_add(chosen, e)) continue;
          const double p = instance_.p(e);
          if (p > 0.0) {
            marginal[e] += prob * p;
            activity(seq, at + 1, chosen.with(e), prob * p);
          }
          prob *= 1.0 - p;
          if (prob == 0.0) return;
        }
      };

  auto run_probes = [&](const ElementSet& survivors, double prob) {
    std::vector<ElementId> seq;
    for (ElementId e : sigma) {
      if (survivors.contains(e)) seq.push_back(e);
    }
    activity(seq, 0, ElementSet(n), prob);
  };

  const bool random_choice =
      config_.outer_scheme.kind == SchemeKind::kPartitionRandom;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << support.size());
       ++mask) {
    ElementSet sampled(n);
    double prob = 1.0;
    for (std::size_t a = 0; a < support.size(); ++a) {
      const double q = std::min(1.0, config_.b * y_[support[a]]);
      if ((mask >> a) & 1u) {
        sampled.insert(support[a]);
        prob *= q;
      } else {
        prob *= 1.0 - q;
      }
    }
    if (prob == 0.0) continue;
    if (!random_choice) {
      run_probes(outer_.resolve(sampled, unused), prob);
      continue;
    }
    // One uniform survivor per contested part.
    const auto& parts = std::get<PartitionMatroid>(instance_.outer().data()).parts;
    std::vector<std::vector<ElementId>> contested;
    ElementSet base = sampled;
    for (const auto& part : parts) {
      std::vector<ElementId> present;
      for (ElementId e : part) {
        if (sampled.contains(e)) present.push_back(e);
      }
      if (present.size() < 2) continue;
      for (ElementId e : present) base.erase(e);
      contested.push_back(std::move(present));
    }
    std::function<void(std::size_t, ElementSet&, double)> choose =
        [&](std::size_t c, ElementSet& survivors, double pr) {
          if (c == contested.size()) {
            run_probes(survivors, pr);
            return;
          }
          const double share = pr / static_cast<double>(contested[c].size());
          for (ElementId e : contested[c]) {
            survivors.insert(e);
            choose(c + 1, survivors, share);
            survivors.erase(e);
          }
        };
    choose(0, base, prob);
  }
  return marginal;
}

NonAdaptivePolicy round(const ProbingInstance& instance,
                        const FractionalSolution& solution,
                        const RoundingConfig& config, Rng& rng) {
  return Rounder(instance, solution, config).round(rng);
}

Execution execute(const NonAdaptivePolicy& policy,
                  const ProbingInstance& instance,
                  const std::vector<bool>& activity) {
  if (activity.size() != instance.size()) {
    throw DomainError("activity vector has the wrong length");
  }
  return execute_with(policy, instance,
                      [&](ElementId e) { return static_cast<bool>(activity[e]); });
}

Execution execute(const NonAdaptivePolicy& policy,
                  const ProbingInstance& instance, Rng& rng) {
  return execute_with(policy, instance, [&](ElementId e) {
    return bernoulli(rng, instance.p(e));
  });
}

PolicyValueReport estimate_policy_value(const ProbingInstance& instance,
                                        const FractionalSolution& solution,
                                        const RoundingConfig& config,
                                        std::size_t trials,
                                        std::uint64_t seed) {
  if (trials == 0) throw DomainError("estimate needs at least one trial");
  const Rounder rounder(instance, solution, config);
  MeanAccumulator acc;
  for_each_trial(seed, trials, [&](std::size_t, Rng& rng) {
    const Execution run = execute(rounder.round(rng), instance, rng);
    acc.add(total_weight(instance, run.chosen));
  });
  return acc.report();
}

}  // namespace probing
