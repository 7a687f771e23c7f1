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
// acceptance_suite [--seed S] [criterion ids...]
// Prints one PASS/FAIL line per criterion; exits 1 if any fails.
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>

#include "probing/acceptance.hpp"

int main(int argc, char** argv) {
  probing::AcceptanceOptions options;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      options.seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      options.only.push_back(std::atoi(arg.c_str()));
    }
  }
  bool passed = true;
  probing::run_acceptance(options, [&](const probing::CriterionResult& r) {
    std::cout << probing::format_result_line(r) << std::endl;
    passed = passed && r.passed;
  });
  return passed ? 0 : 1;
}
