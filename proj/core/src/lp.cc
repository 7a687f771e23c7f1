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
#include "probing/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <tuple>

#include "probing/errors.hpp"
#include "probing/simplex.hpp"

namespace probing {
namespace {

constexpr std::size_t kMaxRounds = 5000;
constexpr std::size_t kEnumeratedCap = 12;
constexpr double kCoveringTol = 1e-9;

struct Support {
  std::vector<ElementId> elements;  // elements with p > 0
  std::vector<std::size_t> column;  // element -> column, or npos
};

Support support_of(const ProbingInstance& instance) {
  Support s;
  s.column.assign(instance.size(), static_cast<std::size_t>(-1));
  for (ElementId e = 0; e < instance.size(); ++e) {
    if (instance.p(e) > 0.0) {
      s.column[e] = s.elements.size();
      s.elements.push_back(e);
    }
  }
  return s;
}

LinearProgram base_program(const ProbingInstance& instance,
                           const Support& support) {
  LinearProgram lp;
  const std::size_t n = support.elements.size();
  for (ElementId e : support.elements) {
    lp.objective.push_back(instance.weight(e) * instance.p(e));
  }
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> row(n, 0.0);
    row[j] = 1.0;
    lp.add_row(std::move(row), 1.0);
  }
  return lp;
}

std::vector<double> cut_row(const ProbingInstance& instance,
                            const Support& support, const LpCut& cut) {
  std::vector<double> row(support.elements.size(), 0.0);
  cut.members.for_each([&](ElementId e) {
    const std::size_t j = support.column[e];
    if (j == static_cast<std::size_t>(-1)) return;
    row[j] = cut.side == CutSide::kInner ? instance.p(e) : 1.0;
  });
  return row;
}

FractionalSolution finish(const ProbingInstance& instance,
                          const Support& support, const LpSolution& sol) {
  FractionalSolution out;
  out.y.assign(instance.size(), 0.0);
  out.x.assign(instance.size(), 0.0);
  for (std::size_t j = 0; j < support.elements.size(); ++j) {
    const ElementId e = support.elements[j];
    out.y[e] = std::clamp(sol.x[j], 0.0, 1.0);
    out.x[e] = instance.p(e) * out.y[e];
    out.objective += instance.weight(e) * out.x[e];
  }
  return out;
}

}  // namespace

FractionalSolution solve_probing_lp(const ProbingInstance& instance) {
  const Support support = support_of(instance);
  LinearProgram lp = base_program(instance, support);
  const std::vector<ConstraintSystem> inner = instance.inner().factors();
  const std::vector<ConstraintSystem> outer = instance.outer().factors();

  std::set<std::pair<CutSide, ElementSet>> seen;
  std::vector<LpCut> cuts;
  for (std::size_t round = 1;; ++round) {
    if (round > kMaxRounds) {
      throw ProbingError("lp: cut generation did not converge");
    }
    FractionalSolution current = finish(instance, support, solve_lp(lp));
    bool added = false;
    auto offer = [&](CutSide side, const std::optional<SubsetWitness>& w) {
      if (!w) return;
      LpCut cut{side, w->members, w->bound};
      if (!seen.emplace(side, cut.members).second) return;
      lp.add_row(cut_row(instance, support, cut), cut.bound);
      cuts.push_back(std::move(cut));
      added = true;
    };
    for (const auto& sys : inner) offer(CutSide::kInner, sys.separate(current.x));
    for (const auto& sys : outer) offer(CutSide::kOuter, sys.separate(current.y));
    if (!added) {
      current.cuts = std::move(cuts);
      current.rounds = round;
      return current;
    }
  }
}

FractionalSolution solve_probing_lp_enumerated(const ProbingInstance& instance,
                                               RankPolytope polytope) {
  const Support support = support_of(instance);
  const std::size_t n = support.elements.size();
  if (n > kEnumeratedCap) {
    throw CapabilityError("enumerated LP over " + std::to_string(n) +
                          " elements exceeds the cap of " +
                          std::to_string(kEnumeratedCap));
  }
  LinearProgram lp = base_program(instance, support);
  auto systems = [&](const ConstraintSystem& sys) {
    return polytope == RankPolytope::kMemberwise
               ? sys.factors()
               : std::vector<ConstraintSystem>{sys};
  };
  const auto inner = systems(instance.inner());
  const auto outer = systems(instance.outer());
  std::vector<LpCut> cuts;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    ElementSet members(instance.size());
    for (std::size_t j = 0; j < n; ++j) {
      if ((mask >> j) & 1u) members.insert(support.elements[j]);
    }
    for (const auto& sys : inner) {
      cuts.push_back({CutSide::kInner, members,
                      static_cast<double>(sys.rank(members))});
    }
    for (const auto& sys : outer) {
      cuts.push_back({CutSide::kOuter, members,
                      static_cast<double>(sys.rank(members))});
    }
  }
  for (const LpCut& cut : cuts) {
    lp.add_row(cut_row(instance, support, cut), cut.bound);
  }
  FractionalSolution out = finish(instance, support, solve_lp(lp));
  out.rounds = 1;
  return out;
}

bool check_claim_lp_opt(double lp_value, double opt_value) {
  return lp_value >= opt_value - 1e-6;
}

bool is_lp_feasible(const ProbingInstance& instance, std::span<const double> y,
                    double tolerance) {
  if (y.size() != instance.size()) return false;
  std::vector<double> x(y.size());
  std::vector<double> yc(y.size());
  for (ElementId e = 0; e < y.size(); ++e) {
    if (!(y[e] >= -tolerance && y[e] <= 1.0 + tolerance)) return false;
    yc[e] = std::clamp(y[e], 0.0, 1.0);
    x[e] = instance.p(e) * yc[e];
  }
  auto ok = [&](const ConstraintSystem& sys, const std::vector<double>& v) {
    for (const auto& f : sys.factors()) {
      const auto w = f.separate(v);
      if (w && w->value - w->bound > tolerance) return false;
    }
    return true;
  };
  return ok(instance.inner(), x) && ok(instance.outer(), yc);
}

DualCheck check_dual(const DualCertificate& certificate,
                     const ProbingInstance& instance) {
  const std::size_t n = instance.size();
  std::vector<double> alpha_cover(n, 0.0);
  std::vector<double> beta_cover(n, 0.0);
  DualCheck out;
  bool nonnegative = true;
  auto scan = [&](const std::map<ElementSet, double>& weights,
                  const ConstraintSystem& sys, std::vector<double>& cover) {
    for (const auto& [set, w] : weights) {
      if (set.universe() != n) {
        throw DomainError("certificate set over the wrong universe");
      }
      if (w < 0.0) nonnegative = false;
      if (w == 0.0) continue;
      set.for_each([&](ElementId e) { cover[e] += w; });
      out.value += static_cast<double>(sys.rank(set)) * w;
    }
  };
  scan(certificate.alpha, instance.inner(), alpha_cover);
  scan(certificate.beta, instance.outer(), beta_cover);

  out.min_slack = std::numeric_limits<double>::infinity();
  for (ElementId e = 0; e < n; ++e) {
    const double p = instance.p(e);
    out.min_slack = std::min(out.min_slack, p * alpha_cover[e] + beta_cover[e] - p);
  }
  if (n == 0) out.min_slack = 0.0;
  out.feasible = nonnegative && out.min_slack >= -kCoveringTol;
  return out;
}

DualCertificate combine(
    const std::vector<std::pair<double, DualCertificate>>& weighted) {
  DualCertificate out;
  for (const auto& [w, cert] : weighted) {
    for (const auto& [s, a] : cert.alpha) out.alpha[s] += w * a;
    for (const auto& [s, b] : cert.beta) out.beta[s] += w * b;
  }
  return out;
}

}  // namespace probing
