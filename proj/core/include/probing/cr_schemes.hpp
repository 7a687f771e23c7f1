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
#ifndef PROBING_CR_SCHEMES_HPP_
#define PROBING_CR_SCHEMES_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "probing/constraint_system.hpp"
#include "probing/element_set.hpp"
#include "probing/random.hpp"

namespace probing {

enum class SchemeKind {
  kOrdered,          // greedy along a permutation; c = 1 - k b
  kPartitionRandom,  // one uniform survivor per part; c = (1 - e^-b) / b
};

enum class OrderPolicy {
  // Built backwards from z: the element least likely to be spanned by the
  // others goes last. Guarantees 1 - k b per element for intersections.
  kCertified,
  kByWeight,  // weight descending, ties by index
  kByIndex,
  kRandom,    // fresh uniform permutation per resolution
};

struct CrSchemeSpec {
  SchemeKind kind = SchemeKind::kOrdered;
  OrderPolicy order = OrderPolicy::kCertified;
  double b = 1.0;
};

// Per-element conditional retention the scheme guarantees on the system.
// k is effective_k(), so a free system gives 1 for the ordered scheme.
double scheme_target_c(const CrSchemeSpec& spec, const ConstraintSystem& system);

// Partition matroid whose capacities are all 1.
bool is_unit_partition(const ConstraintSystem& system);

// Scans i along order and keeps e when it stays independent.
ElementSet resolve_ordered(const ConstraintSystem& system,
                           std::span<const ElementId> order,
                           const ElementSet& i);

// Keeps one uniform member of i in each part; elements outside every part
// survive. Throws CapabilityError unless is_unit_partition(system).
ElementSet resolve_partition(const ConstraintSystem& system,
                             const ElementSet& i, Rng& rng);

// Sampling probabilities above this use Monte Carlo to score elements.
inline constexpr std::size_t kCertifiedExactSupport = 12;

// score(e) = sum over members j of Pr[e in span_j(I minus e)], I ~ b z on
// the elements still unplaced; the minimum scorer is placed last.
std::vector<ElementId> certified_order(const ConstraintSystem& system,
                                       std::span<const double> z, double b,
                                       std::uint64_t seed = kDefaultSeed);

// A scheme bound to one system and fractional point.
class ContentionResolver {
 public:
  // weights are only read by OrderPolicy::kByWeight; empty means all equal.
  ContentionResolver(CrSchemeSpec spec, ConstraintSystem system,
                     std::vector<double> z, std::vector<double> weights = {});

  const CrSchemeSpec& spec() const { return spec_; }
  const ConstraintSystem& system() const { return system_; }
  double target_c() const { return scheme_target_c(spec_, system_); }

  // The permutation of an ordered scheme; drawn from rng for kRandom.
  std::vector<ElementId> order(Rng& rng) const;
  ElementSet resolve(const ElementSet& i, Rng& rng) const;

 private:
  CrSchemeSpec spec_;
  ConstraintSystem system_;
  std::vector<ElementId> fixed_order_;
};

// Exact Pr[e kept | e in I] = E[1 / (1 + K)] for the random-choice scheme,
// K the number of other part members sampled.
std::vector<double> partition_retention(const ConstraintSystem& system,
                                        std::span<const double> z, double b);

struct RetentionEstimate {
  std::size_t included = 0;
  std::size_t kept = 0;
  double estimate = 1.0;  // kept / included, 1 when never included
  double radius = 0.0;    // 2.58 sigma
};

// Samples I with probabilities b z_e and applies the scheme. Throws
// DomainError when z is not in the system's polytope.
std::vector<RetentionEstimate> verify_scheme(const CrSchemeSpec& spec,
                                             const ConstraintSystem& system,
                                             std::span<const double> z,
                                             std::size_t trials,
                                             std::uint64_t seed);

struct MonotonicityCheck {
  bool holds = false;
  double p_small = 0.0;  // Pr[e in pi(I1)]
  double p_large = 0.0;  // Pr[e in pi(I2)]
  double slack = 0.0;    // allowed shortfall
};

// Exact for the partition scheme and fixed orders; Monte Carlo with
// 3 radius slack for random orders.
MonotonicityCheck verify_monotonicity(const CrSchemeSpec& spec,
                                      const ConstraintSystem& system,
                                      std::span<const double> z,
                                      const ElementSet& i1,
                                      const ElementSet& i2, ElementId e,
                                      std::size_t trials, std::uint64_t seed);

}  // namespace probing

#endif  // PROBING_CR_SCHEMES_HPP_
