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
#ifndef PROBING_SPM_HPP_
#define PROBING_SPM_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "probing/constraint_system.hpp"
#include "probing/instance.hpp"
#include "probing/lp.hpp"
#include "probing/random.hpp"
#include "probing/rounding.hpp"
#include "probing/value_report.hpp"

namespace probing {

// Single-parameter Bayesian auction with discrete valuations in {0..B}.
struct AuctionSpec {
  std::size_t max_value = 0;                        // B
  std::vector<std::vector<double>> distributions;  // Pr[v_i = c], c = 0..B
  ConstraintSystem feasibility = ConstraintSystem::Free(0);  // over agents

  std::size_t agents() const { return distributions.size(); }
  // Pr[v_i >= c]
  double survival(std::size_t agent, std::size_t price) const;
  // Throws DomainError unless every distribution has B+1 non-negative masses
  // summing to 1 within 1e-9 and feasibility covers the agents.
  void validate() const;
};

// Element of the probing universe standing for "offer price c to agent i".
inline ElementId offer_element(const AuctionSpec& spec, std::size_t agent,
                               std::size_t price) {
  return agent * (spec.max_value + 1) + price;
}

// Weights c, probabilities Pr[v_i >= c]; outer allows one offer per agent,
// inner lifts feasibility so all copies of an agent are parallel.
ProbingInstance build_probing_instance(const AuctionSpec& spec);

FractionalSolution solve_lp_p(const AuctionSpec& spec);

struct MechanismLpSolution {
  std::vector<std::vector<double>> z;  // z[i][c], non-decreasing in c
  std::vector<double> x;               // sum_c Pr[v_i = c] z[i][c]
  double objective = 0.0;
};

// Upper bound on the revenue of truthful mechanisms, by cut generation on
// the feasibility polytope.
MechanismLpSolution solve_lp_m(const AuctionSpec& spec);

double lp_m_objective(const AuctionSpec& spec,
                      const std::vector<std::vector<double>>& z);
bool is_lp_m_feasible(const AuctionSpec& spec,
                      const std::vector<std::vector<double>>& z,
                      double tolerance = 1e-9);

// y_{i,c} = z_{i,c} - z_{i,c-1}, indexed by offer_element.
std::vector<double> lp_m_to_lp_p(const AuctionSpec& spec,
                                 const std::vector<std::vector<double>>& z);

struct Offer {
  std::size_t agent = 0;
  std::size_t price = 0;
  friend bool operator==(const Offer&, const Offer&) = default;
};

// Take-it-or-leave-it prices in sequence; an offer is skipped when
// accepting it would break feasibility.
struct SpmMechanism {
  std::vector<Offer> offers;
};

// Rounds one LP_P solution repeatedly with b = 1 / (2k + 1).
class SpmBuilder {
 public:
  explicit SpmBuilder(const AuctionSpec& spec);

  const FractionalSolution& lp() const { return lp_; }
  const Rounder& rounder() const { return rounder_; }
  int k() const { return k_; }
  SpmMechanism draw(Rng& rng) const;

 private:
  AuctionSpec spec_;
  ProbingInstance instance_;
  FractionalSolution lp_;
  int k_;
  Rounder rounder_;
};

SpmMechanism build_spm(const AuctionSpec& spec, std::uint64_t seed);

// Expected revenue by enumerating acceptance patterns; at most 12 agents.
double spm_revenue_exact(const SpmMechanism& mechanism,
                         const AuctionSpec& spec);

// Samples whole valuation vectors.
PolicyValueReport spm_revenue_monte_carlo(const SpmMechanism& mechanism,
                                          const AuctionSpec& spec,
                                          std::size_t trials,
                                          std::uint64_t seed);

}  // namespace probing

#endif  // PROBING_SPM_HPP_
