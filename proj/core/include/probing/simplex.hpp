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
#ifndef PROBING_SIMPLEX_HPP_
#define PROBING_SIMPLEX_HPP_

#include <cstddef>
#include <vector>

namespace probing {

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 so that the origin
// is feasible.
struct LinearProgram {
  std::vector<double> objective;
  std::vector<std::vector<double>> rows;
  std::vector<double> rhs;

  std::size_t num_vars() const { return objective.size(); }
  void add_row(std::vector<double> row, double bound);
};

struct LpSolution {
  std::vector<double> x;
  std::vector<double> duals;  // one per row
  double objective = 0.0;
  std::size_t pivots = 0;
};

// Dense dictionary simplex with Bland's rule. Throws DomainError on
// malformed input (negative rhs, ragged rows) and ProbingError when the
// program is unbounded.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace probing

#endif  // PROBING_SIMPLEX_HPP_
