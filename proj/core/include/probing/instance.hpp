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
#ifndef PROBING_INSTANCE_HPP_
#define PROBING_INSTANCE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "probing/constraint_system.hpp"

namespace probing {

struct Element {
  double weight = 1.0;
  double p = 0.0;
  std::optional<int> deadline;
  friend bool operator==(const Element&, const Element&) = default;
};

// Elements with an inner constraint on the chosen set and an outer
// constraint on the probed set.
class ProbingInstance {
 public:
  // Throws DomainError on negative or non-finite weights, p outside [0,1],
  // deadlines below 1, or constraint universes of the wrong size.
  ProbingInstance(std::vector<Element> elements, ConstraintSystem inner,
                  ConstraintSystem outer);

  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(ElementId e) const { return elements_[e]; }
  double weight(ElementId e) const { return elements_[e].weight; }
  double p(ElementId e) const { return elements_[e].p; }
  const ConstraintSystem& inner() const { return inner_; }
  const ConstraintSystem& outer() const { return outer_; }

  // True when every element carries a deadline.
  bool has_deadlines() const;
  bool is_unweighted() const;

  ProbingInstance with_weights(std::vector<double> weights) const;
  ProbingInstance with_outer(ConstraintSystem outer) const;

  friend bool operator==(const ProbingInstance&,
                         const ProbingInstance&) = default;

 private:
  std::vector<Element> elements_;
  ConstraintSystem inner_;
  ConstraintSystem outer_;
};

// sum of weights over s
double total_weight(const ProbingInstance& instance, const ElementSet& s);

}  // namespace probing

#endif  // PROBING_INSTANCE_HPP_
