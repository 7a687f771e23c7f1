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
#include "probing/spm.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <string>

#include "probing/errors.hpp"
#include "probing/simplex.hpp"

namespace probing {
namespace {

constexpr std::size_t kExactAgentCap = 12;
constexpr std::size_t kMaxRounds = 5000;

std::vector<double> agent_service(const AuctionSpec& spec,
                                  const std::vector<std::vector<double>>& z) {
  std::vector<double> x(spec.agents(), 0.0);
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    for (std::size_t c = 0; c <= spec.max_value; ++c) {
      x[i] += spec.distributions[i][c] * z[i][c];
    }
  }
  return x;
}

RoundingConfig spm_config(int k) {
  RoundingConfig config;
  config.b = 1.0 / (2.0 * k + 1.0);
  config.outer_scheme.kind = SchemeKind::kPartitionRandom;
  config.inner_scheme.kind = SchemeKind::kOrdered;
  config.inner_scheme.order = OrderPolicy::kCertified;
  return config;
}

}  // namespace

double AuctionSpec::survival(std::size_t agent, std::size_t price) const {
  double s = 0.0;
  for (std::size_t c = price; c <= max_value; ++c) s += distributions[agent][c];
  return std::min(1.0, s);
}

void AuctionSpec::validate() const {
  for (std::size_t i = 0; i < agents(); ++i) {
    const auto& d = distributions[i];
    const std::string where = "agent " + std::to_string(i);
    if (d.size() != max_value + 1) {
      throw DomainError(where + ": distribution needs max_value + 1 masses");
    }
    double total = 0.0;
    for (double m : d) {
      if (!(m >= 0.0)) throw DomainError(where + ": negative probability mass");
      total += m;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw DomainError(where + ": distribution sums to " +
                        std::to_string(total));
    }
  }
  if (feasibility.universe_size() != agents()) {
    throw DomainError("feasibility system is not over the agents");
  }
}

ProbingInstance build_probing_instance(const AuctionSpec& spec) {
  spec.validate();
  const std::size_t levels = spec.max_value + 1;
  std::vector<Element> elements;
  std::vector<std::vector<ElementId>> parts(spec.agents());
  std::vector<ElementId> image;
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    for (std::size_t c = 0; c < levels; ++c) {
      parts[i].push_back(elements.size());
      image.push_back(i);
      elements.push_back({static_cast<double>(c), spec.survival(i, c), {}});
    }
  }
  const std::size_t n = elements.size();
  auto outer = ConstraintSystem::Partition(
      n, std::move(parts), std::vector<std::size_t>(spec.agents(), 1));
  auto inner = ConstraintSystem::Lifted(spec.feasibility, std::move(image));
  return ProbingInstance(std::move(elements), std::move(inner), std::move(outer));
}

FractionalSolution solve_lp_p(const AuctionSpec& spec) {
  return solve_probing_lp(build_probing_instance(spec));
}

MechanismLpSolution solve_lp_m(const AuctionSpec& spec) {
  spec.validate();
  const std::size_t levels = spec.max_value + 1;
  const std::size_t n = spec.agents() * levels;
  auto var = [&](std::size_t i, std::size_t c) { return i * levels + c; };

  LinearProgram lp;
  lp.objective.assign(n, 0.0);
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    for (std::size_t c = 0; c < levels; ++c) {
      lp.objective[var(i, c)] =
          static_cast<double>(c) * spec.distributions[i][c] -
          (c + 1 < levels ? spec.survival(i, c + 1) : 0.0);
      std::vector<double> row(n, 0.0);
      row[var(i, c)] = 1.0;
      if (c + 1 < levels) {
        row[var(i, c + 1)] = -1.0;
        lp.add_row(std::move(row), 0.0);
      } else {
        lp.add_row(std::move(row), 1.0);
      }
    }
  }

  const auto factors = spec.feasibility.factors();
  std::set<ElementSet> seen;
  for (std::size_t round = 1; round <= kMaxRounds; ++round) {
    const LpSolution sol = solve_lp(lp);
    MechanismLpSolution out;
    out.z.assign(spec.agents(), std::vector<double>(levels, 0.0));
    for (std::size_t i = 0; i < spec.agents(); ++i) {
      for (std::size_t c = 0; c < levels; ++c) {
        out.z[i][c] = std::clamp(sol.x[var(i, c)], 0.0, 1.0);
      }
    }
    out.x = agent_service(spec, out.z);
    std::vector<double> xc = out.x;
    for (double& v : xc) v = std::clamp(v, 0.0, 1.0);
    bool added = false;
    for (const auto& f : factors) {
      const auto w = f.separate(xc);
      if (!w || !seen.insert(w->members).second) continue;
      std::vector<double> row(n, 0.0);
      w->members.for_each([&](ElementId i) {
        for (std::size_t c = 0; c < levels; ++c) {
          row[var(i, c)] = spec.distributions[i][c];
        }
      });
      lp.add_row(std::move(row), w->bound);
      added = true;
    }
    if (!added) {
      out.objective = lp_m_objective(spec, out.z);
      return out;
    }
  }
  throw ProbingError("LP_M cut generation did not converge");
}

double lp_m_objective(const AuctionSpec& spec,
                      const std::vector<std::vector<double>>& z) {
  double total = 0.0;
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    double prefix = 0.0;  // sum_{h < c} z[i][h]
    for (std::size_t c = 0; c <= spec.max_value; ++c) {
      total += spec.distributions[i][c] *
               (static_cast<double>(c) * z[i][c] - prefix);
      prefix += z[i][c];
    }
  }
  return total;
}

bool is_lp_m_feasible(const AuctionSpec& spec,
                      const std::vector<std::vector<double>>& z,
                      double tolerance) {
  if (z.size() != spec.agents()) return false;
  for (const auto& row : z) {
    if (row.size() != spec.max_value + 1) return false;
    if (row.front() < -tolerance || row.back() > 1.0 + tolerance) return false;
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (row[c - 1] > row[c] + tolerance) return false;
    }
  }
  std::vector<double> x = agent_service(spec, z);
  for (double& v : x) v = std::clamp(v, 0.0, 1.0);
  for (const auto& f : spec.feasibility.factors()) {
    const auto w = f.separate(x);
    if (w && w->value - w->bound > tolerance) return false;
  }
  return true;
}

std::vector<double> lp_m_to_lp_p(const AuctionSpec& spec,
                                 const std::vector<std::vector<double>>& z) {
  std::vector<double> y(spec.agents() * (spec.max_value + 1), 0.0);
  for (std::size_t i = 0; i < spec.agents(); ++i) {
    double previous = 0.0;
    for (std::size_t c = 0; c <= spec.max_value; ++c) {
      y[offer_element(spec, i, c)] = z[i][c] - previous;
      previous = z[i][c];
    }
  }
  return y;
}

SpmBuilder::SpmBuilder(const AuctionSpec& spec)
    : spec_(spec),
      instance_(build_probing_instance(spec)),
      lp_(solve_probing_lp(instance_)),
      k_(std::max(1, spec.feasibility.k_parameter())),
      rounder_(instance_, lp_, spm_config(k_)) {}

SpmMechanism SpmBuilder::draw(Rng& rng) const {
  const NonAdaptivePolicy policy = rounder_.round(rng);
  SpmMechanism mech;
  std::vector<char> offered(spec_.agents(), 0);
  const std::size_t levels = spec_.max_value + 1;
  for (ElementId e : policy.probe_sequence) {
    const std::size_t agent = e / levels;
    const std::size_t price = e % levels;
    if (offered[agent]) continue;
    offered[agent] = 1;
    if (price == 0) continue;
    mech.offers.push_back({agent, price});
  }
  return mech;
}

SpmMechanism build_spm(const AuctionSpec& spec, std::uint64_t seed) {
  Rng rng(derive_seed(seed, 0));
  return SpmBuilder(spec).draw(rng);
}

double spm_revenue_exact(const SpmMechanism& mechanism,
                         const AuctionSpec& spec) {
  if (spec.agents() > kExactAgentCap) {
    throw CapabilityError("exact revenue over " +
                          std::to_string(spec.agents()) +
                          " agents exceeds the cap of " +
                          std::to_string(kExactAgentCap));
  }
  const auto& offers = mechanism.offers;
  std::function<double(std::size_t, const ElementSet&)> go =
      [&](std::size_t at, const ElementSet& accepted) {
        for (; at < offers.size(); ++at) {
          if (spec.feasibility.can_add(accepted, offers[at].agent)) break;
        }
        if (at == offers.size()) return 0.0;
        const Offer& o = offers[at];
        const double q = spec.survival(o.agent, o.price);
        double v = 0.0;
        if (q > 0.0) {
          v += q * (static_cast<double>(o.price) +
                    go(at + 1, accepted.with(o.agent)));
        }
        if (q < 1.0) v += (1.0 - q) * go(at + 1, accepted);
        return v;
      };
  return go(0, ElementSet(spec.agents()));
}

PolicyValueReport spm_revenue_monte_carlo(const SpmMechanism& mechanism,
                                          const AuctionSpec& spec,
                                          std::size_t trials,
                                          std::uint64_t seed) {
  if (trials == 0) throw DomainError("simulation needs at least one trial");
  MeanAccumulator acc;
  std::vector<std::size_t> value(spec.agents());
  for_each_trial(seed, trials, [&](std::size_t, Rng& rng) {
    for (std::size_t i = 0; i < spec.agents(); ++i) {
      double u = uniform01(rng);
      std::size_t c = 0;
      while (c < spec.max_value && u >= spec.distributions[i][c]) {
        u -= spec.distributions[i][c];
        ++c;
      }
      value[i] = c;
    }
    ElementSet accepted(spec.agents());
    double revenue = 0.0;
    for (const Offer& o : mechanism.offers) {
      if (!spec.feasibility.can_add(accepted, o.agent)) continue;
      if (value[o.agent] >= o.price) {
        accepted.insert(o.agent);
        revenue += static_cast<double>(o.price);
      }
    }
    acc.add(revenue);
  });
  return acc.report();
}

}  // namespace probing
