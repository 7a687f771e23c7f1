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
#include "probing/instance.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "probing/errors.hpp"

namespace probing {

ProbingInstance::ProbingInstance(std::vector<Element> elements,
                                 ConstraintSystem inner,
                                 ConstraintSystem outer)
    : elements_(std::move(elements)),
      inner_(std::move(inner)),
      outer_(std::move(outer)) {
  for (std::size_t e = 0; e < elements_.size(); ++e) {
    const Element& el = elements_[e];
    const std::string where = "element " + std::to_string(e);
    if (!std::isfinite(el.weight) || el.weight < 0.0) {
      throw DomainError(where + ": weight must be finite and non-negative");
    }
    if (!(el.p >= 0.0 && el.p <= 1.0)) {
      throw DomainError(where + ": probability outside [0,1]");
    }
    if (el.deadline && *el.deadline < 1) {
      throw DomainError(where + ": deadline must be at least 1");
    }
  }
  if (inner_.universe_size() != elements_.size() ||
      outer_.universe_size() != elements_.size()) {
    throw DomainError("constraint universe does not match the " +
                      std::to_string(elements_.size()) + " elements");
  }
}

bool ProbingInstance::has_deadlines() const {
  for (const Element& el : elements_) {
    if (!el.deadline) return false;
  }
  return true;
}

bool ProbingInstance::is_unweighted() const {
  for (const Element& el : elements_) {
    if (el.weight != 1.0) return false;
  }
  return true;
}

ProbingInstance ProbingInstance::with_weights(
    std::vector<double> weights) const {
  if (weights.size() != elements_.size()) {
    throw DomainError("weight vector has the wrong length");
  }
  std::vector<Element> elements = elements_;
  for (std::size_t e = 0; e < elements.size(); ++e) {
    elements[e].weight = weights[e];
  }
  return ProbingInstance(std::move(elements), inner_, outer_);
}

ProbingInstance ProbingInstance::with_outer(ConstraintSystem outer) const {
  return ProbingInstance(elements_, inner_, std::move(outer));
}

double total_weight(const ProbingInstance& instance, const ElementSet& s) {
  double total = 0.0;
  s.for_each([&](ElementId e) { total += instance.weight(e); });
  return total;
}

}  // namespace probing
