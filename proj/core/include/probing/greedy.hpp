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
#ifndef PROBING_GREEDY_HPP_
#define PROBING_GREEDY_HPP_

#include <cstddef>
#include <vector>

#include "probing/constraint_system.hpp"
#include "probing/element_set.hpp"
#include "probing/instance.hpp"
#include "probing/lp.hpp"
#include "probing/random.hpp"

namespace probing {

// One realized run of a probing policy.
struct PathOutcome {
  std::vector<ElementId> probed;  // Q, in probe order
  ElementSet chosen;              // S
  ElementSet skipped_deadline;    // B; empty without deadlines
  double probability = 1.0;       // of this activity pattern along the path
};

// Exact path enumeration is offered up to this many elements.
inline constexpr std::size_t kPathEnumerationCap = 15;

// p descending, ties by ascending index.
std::vector<ElementId> greedy_order(const ProbingInstance& instance);

// activity[e] is read only for elements that get probed.
PathOutcome run_greedy(const ProbingInstance& instance,
                       const std::vector<bool>& activity);
PathOutcome run_greedy(const ProbingInstance& instance, Rng& rng);

// Every distinct path with its probability; branches only on probes.
std::vector<PathOutcome> enumerate_greedy_paths(
    const ProbingInstance& instance);

struct GreedyValue {
  double chosen_weight = 0.0;  // E[w(S)]
  double probed_mass = 0.0;    // E[sum_{e in Q} p_e]
};
GreedyValue exact_greedy_value(const ProbingInstance& instance);

// alpha(span_in(S)) = 1 and beta(span_out(a_1..a_h)) += p_{a_h} - p_{a_{h+1}}.
// Throws ContractError when the probe order is not non-increasing in p.
DualCertificate build_dual_certificate(const ProbingInstance& instance,
                                       const PathOutcome& path);

// Chain D_1 <= D_2 <= ... with D_t = {e : d_e <= t} and capacity t.
ConstraintSystem build_deadline_laminar(const ProbingInstance& instance);

// Greedy with a global clock: elements past their deadline are admitted to
// Q and B without a probe and join S with probability p_e.
PathOutcome run_greedy_deadline(const ProbingInstance& instance,
                                const std::vector<bool>& activity);
PathOutcome run_greedy_deadline(const ProbingInstance& instance, Rng& rng);
std::vector<PathOutcome> enumerate_deadline_paths(
    const ProbingInstance& instance);

struct DeadlineValue {
  double realized = 0.0;  // E[w(S \ B)], the policy's value
  double coupled = 0.0;   // E[w(S)], greedy on the relaxed instance
};
DeadlineValue exact_deadline_greedy_value(const ProbingInstance& instance);

}  // namespace probing

#endif  // PROBING_GREEDY_HPP_
