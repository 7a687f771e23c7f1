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
#ifndef PROBING_ROUNDING_HPP_
#define PROBING_ROUNDING_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "probing/cr_schemes.hpp"
#include "probing/element_set.hpp"
#include "probing/instance.hpp"
#include "probing/lp.hpp"
#include "probing/random.hpp"
#include "probing/value_report.hpp"

namespace probing {

// The schemes' own b fields are ignored; both use config.b.
struct RoundingConfig {
  double b = 1.0;
  CrSchemeSpec outer_scheme;
  CrSchemeSpec inner_scheme;
  std::uint64_t seed = kDefaultSeed;
};

// b = 1 / (2 (k_in + k_out)) over effective k (1 when both systems are
// free); random choice outside when the outer system is a unit partition,
// certified ordered schemes otherwise.
RoundingConfig default_rounding_config(const ProbingInstance& instance);

// b (c_out + c_in - 1); throws ConfigError when it is not positive or the
// inner scheme is not ordered.
double rounding_guarantee(const ProbingInstance& instance,
                          const RoundingConfig& config);

// Candidates that survived the outer scheme, in the inner scheme's order.
struct NonAdaptivePolicy {
  std::vector<ElementId> probe_sequence;
};

struct Execution {
  ElementSet probed;
  ElementSet chosen;
};

// Rounding state for one LP solution; the scheme orders are fixed at
// construction.
class Rounder {
 public:
  Rounder(const ProbingInstance& instance, const FractionalSolution& solution,
          RoundingConfig config);

  const RoundingConfig& config() const { return config_; }
  double guarantee() const { return guarantee_; }
  const ContentionResolver& outer() const { return outer_; }
  const ContentionResolver& inner() const { return inner_; }

  // Samples I with b y_e (elements with y_e = 0 draw nothing), resolves the
  // outer scheme and orders the survivors.
  NonAdaptivePolicy round(Rng& rng) const;

  // Pr[e chosen] for every element, enumerating I, the outer resolution and
  // activities. Needs a fixed inner order and at most 15 sampled elements.
  std::vector<double> exact_marginals() const;

 private:
  ProbingInstance instance_;
  std::vector<double> y_;
  RoundingConfig config_;
  ContentionResolver outer_;
  ContentionResolver inner_;
  double guarantee_;
};

NonAdaptivePolicy round(const ProbingInstance& instance,
                        const FractionalSolution& solution,
                        const RoundingConfig& config, Rng& rng);

// Probes each candidate in turn when the chosen set stays inner-independent.
// activity[e] is read only for probed elements.
Execution execute(const NonAdaptivePolicy& policy,
                  const ProbingInstance& instance,
                  const std::vector<bool>& activity);
Execution execute(const NonAdaptivePolicy& policy,
                  const ProbingInstance& instance, Rng& rng);

// Mean w(S) over fresh (I, outer randomness, activity) per trial.
PolicyValueReport estimate_policy_value(const ProbingInstance& instance,
                                        const FractionalSolution& solution,
                                        const RoundingConfig& config,
                                        std::size_t trials,
                                        std::uint64_t seed);

}  // namespace probing

#endif  // PROBING_ROUNDING_HPP_
