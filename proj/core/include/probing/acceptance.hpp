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
#ifndef PROBING_ACCEPTANCE_HPP_
#define PROBING_ACCEPTANCE_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "probing/random.hpp"

namespace probing {

inline constexpr int kCriterionCount = 11;

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string summary;
  nlohmann::ordered_json metrics;
  double seconds = 0.0;  // wall time; kept out of JSON reports
  double budget_seconds = 0.0;  // 0 when unbudgeted
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::vector<int> only;  // empty runs every criterion
};

std::string criterion_name(int id);

// Throws DomainError for ids outside 1..kCriterionCount.
CriterionResult run_criterion(int id, std::uint64_t seed);

// on_result is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  C1  name: summary (1.2 s)"
std::string format_result_line(const CriterionResult& result);

nlohmann::ordered_json result_to_json(const CriterionResult& result);

}  // namespace probing

#endif  // PROBING_ACCEPTANCE_HPP_
