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
#ifndef PROBING_LP_HPP_
#define PROBING_LP_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "probing/element_set.hpp"
#include "probing/instance.hpp"

namespace probing {

enum class CutSide { kInner, kOuter };

// A rank constraint added during cut generation. Inner cuts bound
// sum p_e y_e, outer cuts bound sum y_e.
struct LpCut {
  CutSide side = CutSide::kInner;
  ElementSet members;
  double bound = 0.0;
};

// x_e = p_e * y_e; x in P(inner), y in P(outer), 0 <= y <= 1.
struct FractionalSolution {
  std::vector<double> x;
  std::vector<double> y;
  double objective = 0.0;  // sum w_e x_e
  std::vector<LpCut> cuts;
  std::size_t rounds = 0;
};

// Cut generation over y with per-member separation of intersections.
// Elements with p_e = 0 never enter the program and get y_e = 0.
FractionalSolution solve_probing_lp(const ProbingInstance& instance);

enum class RankPolytope {
  kMemberwise,  // every member of an intersection separately (as above)
  kSystem,      // rank function of the whole system
};

// Writes out every rank constraint over the support; |V| <= 12.
FractionalSolution solve_probing_lp_enumerated(
    const ProbingInstance& instance,
    RankPolytope polytope = RankPolytope::kMemberwise);

// lp_value >= opt_value - 1e-6
bool check_claim_lp_opt(double lp_value, double opt_value);

// Checks 0 <= y <= 1 and that x = p*y and y pass both separation oracles.
bool is_lp_feasible(const ProbingInstance& instance, std::span<const double> y,
                    double tolerance = 1e-7);

// Dual of the unweighted relaxation:
//   min sum_S r_in(S) alpha(S) + sum_S r_out(S) beta(S)
//   s.t. p_e sum_{S ni e} alpha(S) + sum_{S ni e} beta(S) >= p_e.
struct DualCertificate {
  std::map<ElementSet, double> alpha;
  std::map<ElementSet, double> beta;

  void add_alpha(const ElementSet& s, double w) { alpha[s] += w; }
  void add_beta(const ElementSet& s, double w) { beta[s] += w; }
};

struct DualCheck {
  bool feasible = false;
  double value = 0.0;
  // min over elements of (p_e sum alpha + sum beta - p_e)
  double min_slack = 0.0;
};

DualCheck check_dual(const DualCertificate& certificate,
                     const ProbingInstance& instance);

// sum_i weight_i * certificate_i
DualCertificate combine(
    const std::vector<std::pair<double, DualCertificate>>& weighted);

}  // namespace probing

#endif  // PROBING_LP_HPP_
