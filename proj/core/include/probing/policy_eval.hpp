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
#ifndef PROBING_POLICY_EVAL_HPP_
#define PROBING_POLICY_EVAL_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "probing/element_set.hpp"
#include "probing/instance.hpp"
#include "probing/random.hpp"
#include "probing/value_report.hpp"

namespace probing {

inline constexpr std::size_t kAdaptiveCap = 12;
inline constexpr std::size_t kDeadlineAdaptiveCap = 10;
inline constexpr std::size_t kNonAdaptiveCap = 15;
inline constexpr std::size_t kDeterministicCap = 40;

// One randomized run of a policy; returns the chosen set.
using Policy = std::function<ElementSet(const ProbingInstance&, Rng&)>;

// Probes along order whenever both constraints allow.
Policy order_policy(std::vector<ElementId> order);

// Mean w(S) over independent runs.
PolicyValueReport simulate(const Policy& policy,
                           const ProbingInstance& instance, std::size_t trials,
                           std::uint64_t seed);

// Exact E[w(S)] of the order policy; |V| <= 15.
double exact_nonadaptive_value(std::span<const ElementId> order,
                               const ProbingInstance& instance);

// Optimal adaptive policy value by dynamic programming over (Q, S); |V| <= 12.
// Larger instances are accepted when every p is 0 or 1.
double optimal_adaptive(const ProbingInstance& instance);

// Same, with a clock: the t-th probe may only target e with t <= d_e.
// |V| <= 10.
double optimal_adaptive_deadline(const ProbingInstance& instance);

// All p in {0, 1}: the best common independent set of p = 1 elements, by
// branch and bound; |V| <= 40.
double optimal_deterministic(const ProbingInstance& instance);

}  // namespace probing

#endif  // PROBING_POLICY_EVAL_HPP_
