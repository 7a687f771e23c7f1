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
#ifndef PROBING_CONSTRAINT_SYSTEM_HPP_
#define PROBING_CONSTRAINT_SYSTEM_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "probing/element_set.hpp"

namespace probing {

struct UniformMatroid;
struct PartitionMatroid;
struct LaminarMatroid;
struct GraphicMatroid;
struct SystemIntersection;
struct ExplicitFamily;
struct LiftedSystem;

using ConstraintVariant =
    std::variant<UniformMatroid, PartitionMatroid, LaminarMatroid,
                 GraphicMatroid, SystemIntersection, ExplicitFamily,
                 LiftedSystem>;

// Violated rank constraint: sum of x over members exceeds bound.
struct SubsetWitness {
  ElementSet members;
  double value = 0.0;  // x(members)
  double bound = 0.0;  // rank of members in the (member) system that was cut
};

// Exact rank of non-matroid systems is found by enumeration; queried sets
// larger than this are rejected.
inline constexpr std::size_t kEnumerationCap = 20;
// Explicit families compute k_parameter over every subset of the universe.
inline constexpr std::size_t kExplicitKCap = 15;
// Violations at or below this are treated as satisfied.
inline constexpr double kSeparationTolerance = 1e-9;

// Immutable downward-closed independence system over [0, universe_size).
// Copies share state; all oracles are pure and safe for concurrent readers.
class ConstraintSystem {
 public:
  static ConstraintSystem Uniform(std::size_t universe, std::size_t rank);
  // Every subset is independent.
  static ConstraintSystem Free(std::size_t universe) {
    return Uniform(universe, universe);
  }
  // Elements outside every part are unconstrained.
  static ConstraintSystem Partition(std::size_t universe,
                                    std::vector<std::vector<ElementId>> parts,
                                    std::vector<std::size_t> capacities);
  // Sets must be pairwise nested or disjoint.
  static ConstraintSystem Laminar(std::size_t universe,
                                  std::vector<std::vector<ElementId>> sets,
                                  std::vector<std::size_t> capacities);
  // Element i is the edge edges[i]; the universe is edges.size().
  static ConstraintSystem Graphic(
      std::size_t num_vertices,
      std::vector<std::pair<std::size_t, std::size_t>> edges);
  static ConstraintSystem Intersection(std::vector<ConstraintSystem> members);
  // The family is closed under taking subsets (checked); the empty set is
  // always added.
  static ConstraintSystem Explicit(std::size_t universe,
                                   std::vector<ElementSet> family);
  // Parallel extension: element e becomes a copy of base element image[e].
  // Copies of one base element are mutually dependent. Lifting an
  // intersection lifts each member.
  static ConstraintSystem Lifted(const ConstraintSystem& base,
                                 std::vector<ElementId> image);

  std::size_t universe_size() const { return universe_; }
  const ConstraintVariant& data() const;

  bool is_independent(const ElementSet& s) const;
  // is_independent(s + e), assuming s is independent.
  bool can_add(const ElementSet& s, ElementId e) const;
  std::size_t rank(const ElementSet& s,
                   std::size_t cap = kEnumerationCap) const;
  ElementSet span(const ElementSet& t) const;
  // Some maximal independent subset of s, built by scanning in index order.
  ElementSet greedy_basis(const ElementSet& s) const;

  // Returns a set S with x(S) > rank(S) + tolerance, if any. Intersections
  // are separated member by member, i.e. against the intersection of the
  // member polytopes.
  std::optional<SubsetWitness> separate(std::span<const double> x) const;

  // 1 for a single matroid, the member count for intersections, exact for
  // explicit families.
  int k_parameter() const;
  // 0 when the system constrains nothing, else k_parameter().
  int effective_k() const;
  bool is_matroid() const;
  bool is_free() const;

  // Members of an intersection, or just this system.
  std::vector<ConstraintSystem> factors() const;

  friend bool operator==(const ConstraintSystem& a, const ConstraintSystem& b);

 private:
  ConstraintSystem(std::size_t universe, ConstraintVariant data);

  std::optional<SubsetWitness> separate_unchecked(
      std::span<const double> x) const;

  std::size_t universe_ = 0;
  std::shared_ptr<const ConstraintVariant> data_;
};

struct UniformMatroid {
  std::size_t rank = 0;
  friend bool operator==(const UniformMatroid&, const UniformMatroid&) = default;
};

struct PartitionMatroid {
  std::vector<std::vector<ElementId>> parts;
  std::vector<std::size_t> capacities;
  friend bool operator==(const PartitionMatroid&,
                         const PartitionMatroid&) = default;
};

struct LaminarMatroid {
  std::vector<std::vector<ElementId>> sets;
  std::vector<std::size_t> capacities;
  friend bool operator==(const LaminarMatroid&, const LaminarMatroid&) = default;
};

struct GraphicMatroid {
  std::size_t num_vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  friend bool operator==(const GraphicMatroid&, const GraphicMatroid&) = default;
};

struct SystemIntersection {
  std::vector<ConstraintSystem> members;
  friend bool operator==(const SystemIntersection&,
                         const SystemIntersection&) = default;
};

struct ExplicitFamily {
  std::vector<ElementSet> independent_sets;  // sorted, unique
  int k = -1;  // -1 when the universe is too large to compute it
  friend bool operator==(const ExplicitFamily&, const ExplicitFamily&) = default;
};

struct LiftedSystem {
  ConstraintSystem base;
  std::vector<ElementId> image;
  friend bool operator==(const LiftedSystem&, const LiftedSystem&) = default;
};

inline const ConstraintVariant& ConstraintSystem::data() const {
  return *data_;
}

// Structural validators shared with the file parser.
bool parts_are_disjoint(const std::vector<std::vector<ElementId>>& parts);
bool family_is_laminar(const std::vector<std::vector<ElementId>>& sets);

}  // namespace probing

#endif  // PROBING_CONSTRAINT_SYSTEM_HPP_
