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
#include "probing/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <utility>

#include "probing/cr_schemes.hpp"
#include "probing/errors.hpp"
#include "probing/fixtures.hpp"
#include "probing/greedy.hpp"
#include "probing/io.hpp"
#include "probing/lp.hpp"
#include "probing/policy_eval.hpp"
#include "probing/rounding.hpp"
#include "probing/spm.hpp"

namespace probing {
namespace {

using Json = nlohmann::ordered_json;

// Reports carry a 2.58 sigma radius; the criteria are stated in sigma.
constexpr double kRadiusSigmas = 2.58;
double sigma_of(double radius) { return radius / kRadiusSigmas; }

struct SuiteInstance {
  ProbingInstance instance;
  int k_in;
  int k_out;
};

// Cycles through (k_in, k_out) in {1,2}^2.
std::vector<SuiteInstance> ratio_suite(std::uint64_t seed, std::size_t count,
                                       RandomInstanceOptions options) {
  Rng rng(seed);
  std::vector<SuiteInstance> out;
  for (std::size_t i = 0; i < count; ++i) {
    options.k_in = 1 + static_cast<int>(i % 2);
    options.k_out = 1 + static_cast<int>((i / 2) % 2);
    out.push_back({random_instance(options, rng), options.k_in, options.k_out});
  }
  return out;
}

std::vector<SuiteInstance> unweighted_suite(std::uint64_t seed) {
  return ratio_suite(seed, 200, {});
}

// Largest s in [0, 1] (by bisection) with s z inside every member polytope.
std::vector<double> scale_into_polytope(const ConstraintSystem& system,
                                        std::vector<double> z) {
  auto scaled = [&](double s) {
    std::vector<double> out(z);
    for (double& v : out) v *= s;
    return out;
  };
  if (!system.separate(z)) return z;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < 50; ++it) {
    const double mid = 0.5 * (lo + hi);
    (system.separate(scaled(mid)) ? hi : lo) = mid;
  }
  return scaled(lo);
}

std::vector<double> random_point(std::size_t n, Rng& rng) {
  std::vector<double> z(n);
  for (double& v : z) v = 0.1 + 0.9 * uniform01(rng);
  return z;
}

std::string fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

// -- individual criteria ----------------------------------------------------

void unweighted_ratio(std::uint64_t seed, CriterionResult& r) {
  double worst = std::numeric_limits<double>::infinity();
  std::size_t failures = 0;
  const auto suite = unweighted_suite(seed);
  for (const auto& s : suite) {
    const double greedy = exact_greedy_value(s.instance).chosen_weight;
    const double opt = optimal_adaptive(s.instance);
    const double bound = opt / (s.k_in + s.k_out);
    if (greedy < bound - 1e-9) ++failures;
    if (opt > 0.0) worst = std::min(worst, greedy * (s.k_in + s.k_out) / opt);
  }
  r.passed = failures == 0;
  r.metrics = {{"instances", suite.size()},
               {"failures", failures},
               {"min_ratio_times_k", worst}};
  r.summary = std::to_string(suite.size()) + " instances, min (k_in+k_out) greedy/OPT = " +
              fmt("%.4f", worst);
}

void dual_certificates(std::uint64_t seed, CriterionResult& r) {
  std::size_t paths_checked = 0;
  std::size_t path_failures = 0;
  std::size_t expectation_failures = 0;
  double worst_gap = -std::numeric_limits<double>::infinity();
  const auto suite = unweighted_suite(seed);
  for (const auto& s : suite) {
    const auto paths = enumerate_greedy_paths(s.instance);
    std::vector<std::pair<double, DualCertificate>> weighted;
    double expected = 0.0;
    for (const PathOutcome& path : paths) {
      DualCertificate cert = build_dual_certificate(s.instance, path);
      const DualCheck check = check_dual(cert, s.instance);
      double probed_mass = 0.0;
      for (ElementId e : path.probed) probed_mass += s.instance.p(e);
      const double limit = s.k_in * static_cast<double>(path.chosen.size()) +
                           s.k_out * probed_mass;
      ++paths_checked;
      if (!check.feasible || check.value > limit + 1e-9) ++path_failures;
      expected += path.probability * static_cast<double>(path.chosen.size());
      weighted.emplace_back(path.probability, std::move(cert));
    }
    const DualCheck combined = check_dual(combine(weighted), s.instance);
    const double gap = combined.value - (s.k_in + s.k_out) * expected;
    worst_gap = std::max(worst_gap, gap);
    if (!combined.feasible || gap > 1e-6) ++expectation_failures;
  }
  r.passed = path_failures == 0 && expectation_failures == 0;
  r.metrics = {{"instances", suite.size()},
               {"paths", paths_checked},
               {"path_failures", path_failures},
               {"expectation_failures", expectation_failures},
               {"max_expectation_gap", worst_gap}};
  r.summary = std::to_string(paths_checked) + " paths, " + std::to_string(path_failures) +
              " path failures, max E-gap " + fmt("%.3g", worst_gap);
}

void tightness(std::uint64_t, CriterionResult& r) {
  const ProbingInstance inst = tightness_instance(7);
  const PathOutcome path = run_greedy(inst, std::vector<bool>(inst.size(), true));
  const double greedy = total_weight(inst, path.chosen);
  const double opt = optimal_adaptive(inst);
  const double ratio = greedy / opt;
  r.passed = inst.size() >= 27 && ratio <= 1.0 / 3.0 + 0.1;
  r.metrics = {{"elements", inst.size()}, {"greedy", greedy}, {"opt", opt}, {"ratio", ratio}};
  r.summary = fmt("greedy/OPT = %.4f", ratio) + " on " + std::to_string(inst.size()) +
              " elements";
}

void lp_upper_bound(std::uint64_t seed, CriterionResult& r) {
  std::size_t failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  const auto suite = unweighted_suite(seed);
  for (const auto& s : suite) {
    const double lp = solve_probing_lp(s.instance).objective;
    const double opt = optimal_adaptive(s.instance);
    if (!check_claim_lp_opt(lp, opt)) ++failures;
    worst = std::min(worst, lp - opt);
  }
  r.passed = failures == 0;
  r.metrics = {{"instances", suite.size()}, {"failures", failures}, {"min_lp_minus_opt", worst}};
  r.summary = std::to_string(suite.size()) + " instances, min LP - OPT = " + fmt("%.3g", worst);
}

void cr_bounds(std::uint64_t seed, CriterionResult& r) {
  constexpr std::size_t kTrials = 100000;
  constexpr std::size_t kSize = 8;
  Rng rng(seed);
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  Json fixtures = Json::array();
  std::uint64_t stream = 0;
  for (int k = 1; k <= 3; ++k) {
    for (double b : {0.1, 1.0 / (2 * k + 1)}) {
      for (int rep = 0; rep < 2; ++rep) {
        const auto system = random_matroid_intersection(
            kSize, k, {MatroidKind::kPartition, MatroidKind::kGraphic}, rng);
        const auto z = scale_into_polytope(system, random_point(kSize, rng));
        const CrSchemeSpec spec{SchemeKind::kOrdered, OrderPolicy::kCertified, b};
        const double target = 1.0 - k * b;
        const auto est = verify_scheme(spec, system, z, kTrials, derive_seed(seed, ++stream));
        double min_c = 1.0;
        for (const auto& e : est) {
          if (e.included == 0) continue;
          ++checks;
          const double slack = e.estimate - (target - 3.0 * sigma_of(e.radius));
          worst_slack = std::min(worst_slack, slack);
          if (slack < 0.0) ++failures;
          min_c = std::min(min_c, e.estimate);
        }
        fixtures.push_back({{"scheme", "ordered"}, {"k", k}, {"b", b},
                            {"target", target}, {"min_c", min_c}});
      }
    }
  }
  const double b = 0.25;
  const double target = (1.0 - std::exp(-b)) / b;
  std::size_t exact_failures = 0;
  for (int rep = 0; rep < 2; ++rep) {
    std::vector<std::vector<ElementId>> parts = {{0, 1, 2, 3}, {4, 5, 6}, {7}};
    const auto system = ConstraintSystem::Partition(
        kSize, std::move(parts), std::vector<std::size_t>(3, 1));
    std::vector<double> z = random_point(kSize, rng);
    if (rep == 0) z = {0.25, 0.25, 0.25, 0.25, 0.5, 0.3, 0.2, 1.0};
    z = scale_into_polytope(system, z);
    const CrSchemeSpec spec{SchemeKind::kPartitionRandom, OrderPolicy::kCertified, b};
    const auto exact = partition_retention(system, z, b);
    for (double c : exact) {
      if (c < target - 1e-12) ++exact_failures;
    }
    const auto est = verify_scheme(spec, system, z, kTrials, derive_seed(seed, ++stream));
    double min_c = 1.0;
    for (const auto& e : est) {
      if (e.included == 0) continue;
      ++checks;
      const double slack = e.estimate - (target - 3.0 * sigma_of(e.radius));
      worst_slack = std::min(worst_slack, slack);
      if (slack < 0.0) ++failures;
      min_c = std::min(min_c, e.estimate);
    }
    fixtures.push_back({{"scheme", "partition_random"}, {"b", b}, {"target", target},
                        {"min_c", min_c},
                        {"min_exact_c", *std::min_element(exact.begin(), exact.end())}});
  }
  r.passed = failures == 0 && exact_failures == 0;
  r.metrics = {{"trials", kTrials},
               {"element_checks", checks},
               {"failures", failures},
               {"exact_failures", exact_failures},
               {"min_slack", worst_slack},
               {"fixtures", fixtures}};
  r.summary = std::to_string(checks) + " element checks, " + std::to_string(failures) +
              " below c - 3 sigma, " + std::to_string(exact_failures) + " exact failures";
}

std::vector<SuiteInstance> weighted_suite(std::uint64_t seed, std::size_t count) {
  RandomInstanceOptions options;
  options.weighted = true;
  return ratio_suite(seed, count, options);
}

void rounding_bound(std::uint64_t seed, CriterionResult& r) {
  constexpr std::size_t kTrials = 100000;
  std::size_t marginal_failures = 0;
  std::size_t value_failures = 0;
  double worst_marginal = std::numeric_limits<double>::infinity();
  double worst_ratio = std::numeric_limits<double>::infinity();
  const auto suite = weighted_suite(seed, 50);
  std::uint64_t stream = 0;
  for (const auto& s : suite) {
    const FractionalSolution lp = solve_probing_lp(s.instance);
    RoundingConfig config = default_rounding_config(s.instance);
    config.seed = derive_seed(seed, ++stream);
    const Rounder rounder(s.instance, lp, config);
    const double g = rounder.guarantee();
    const auto marginal = rounder.exact_marginals();
    for (ElementId e = 0; e < s.instance.size(); ++e) {
      const double slack = marginal[e] - g * lp.x[e];
      worst_marginal = std::min(worst_marginal, slack);
      if (slack < -1e-6) ++marginal_failures;
    }
    const auto value = estimate_policy_value(s.instance, lp, config, kTrials,
                                             derive_seed(seed, ++stream));
    if (value.mean < g * lp.objective - 3.0 * sigma_of(value.radius)) ++value_failures;
    if (lp.objective > 0.0) worst_ratio = std::min(worst_ratio, value.mean / (g * lp.objective));
  }
  r.passed = marginal_failures == 0 && value_failures == 0;
  r.metrics = {{"instances", suite.size()},
               {"trials", kTrials},
               {"marginal_failures", marginal_failures},
               {"value_failures", value_failures},
               {"min_marginal_slack", worst_marginal},
               {"min_value_over_bound", worst_ratio}};
  r.summary = std::to_string(suite.size()) + " instances, min marginal slack " +
              fmt("%.3g", worst_marginal) + ", min value/bound " + fmt("%.3f", worst_ratio);
}

void corollary_constant(std::uint64_t seed, CriterionResult& r) {
  constexpr std::size_t kTrials = 50000;
  std::size_t failures = 0;
  double worst = std::numeric_limits<double>::infinity();
  const auto suite = weighted_suite(derive_seed(seed, 1), 24);
  std::uint64_t stream = 1;
  for (const auto& s : suite) {
    const FractionalSolution lp = solve_probing_lp(s.instance);
    RoundingConfig config;
    config.b = 1.0 / (2.0 * (s.k_in + s.k_out));
    config.seed = derive_seed(seed, ++stream);
    const auto value = estimate_policy_value(s.instance, lp, config, kTrials,
                                             derive_seed(seed, ++stream));
    const double bound = lp.objective / (4.0 * (s.k_in + s.k_out));
    if (value.mean < bound - 3.0 * sigma_of(value.radius)) ++failures;
    if (bound > 0.0) worst = std::min(worst, value.mean / bound);
  }
  r.passed = failures == 0;
  r.metrics = {{"instances", suite.size()},
               {"trials", kTrials},
               {"failures", failures},
               {"min_value_over_bound", worst}};
  r.summary = std::to_string(suite.size()) + " instances, min value/(LP/(4(k_in+k_out))) = " +
              fmt("%.3f", worst);
}

struct SpmFixture {
  AuctionSpec spec;
  int k;
};

std::vector<SpmFixture> spm_fixtures(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<SpmFixture> out;
  const std::size_t uniform_shapes[][3] = {{2, 5, 1}, {3, 3, 1}, {4, 4, 2},
                                           {5, 5, 1}, {6, 5, 2}, {6, 3, 3}};
  for (const auto& [n, max_value, rank] : uniform_shapes) {
    out.push_back({random_auction(n, max_value, ConstraintSystem::Uniform(n, rank), rng), 1});
  }
  const std::size_t matching_shapes[][3] = {{2, 2, 5}, {2, 3, 2}, {2, 3, 3}, {3, 2, 4}};
  for (const auto& [left, right, max_value] : matching_shapes) {
    out.push_back(
        {random_auction(left * right, max_value, bipartite_matching(left, right), rng), 2});
  }
  return out;
}

void spm_revenue(std::uint64_t seed, CriterionResult& r) {
  constexpr std::size_t kDraws = 100;
  std::size_t failures = 0;
  std::size_t lp_failures = 0;
  Json fixtures = Json::array();
  std::uint64_t stream = 0;
  for (const auto& f : spm_fixtures(seed)) {
    const SpmBuilder builder(f.spec);
    const double lp_m = solve_lp_m(f.spec).objective;
    const double lp_p = builder.lp().objective;
    Rng rng(derive_seed(seed, ++stream));
    double revenue = 0.0;
    for (std::size_t d = 0; d < kDraws; ++d) {
      revenue += spm_revenue_exact(builder.draw(rng), f.spec);
    }
    revenue /= kDraws;
    const double bound = lp_m / (4.0 * f.k + 2.0);
    if (revenue < bound - 1e-3) ++failures;
    if (lp_p < lp_m - 1e-6) ++lp_failures;
    fixtures.push_back({{"agents", f.spec.agents()},
                        {"max_value", f.spec.max_value},
                        {"k", f.k},
                        {"lp_p", lp_p},
                        {"lp_m", lp_m},
                        {"mean_revenue", revenue},
                        {"bound", bound}});
  }
  r.passed = failures == 0 && lp_failures == 0;
  r.metrics = {{"draws", kDraws},
               {"revenue_failures", failures},
               {"lp_failures", lp_failures},
               {"fixtures", fixtures}};
  r.summary = std::to_string(fixtures.size()) + " auctions, " + std::to_string(failures) +
              " revenue failures, " + std::to_string(lp_failures) + " LP_P < LP_M";
}

void transformer(std::uint64_t seed, CriterionResult& r) {
  Rng rng(seed);
  std::size_t failures = 0;
  double worst = 0.0;
  constexpr std::size_t kPoints = 100;
  for (std::size_t t = 0; t < kPoints; ++t) {
    const std::size_t n = 2 + t % 5;
    const std::size_t max_value = 1 + (t / 5) % 5;
    ConstraintSystem feasibility =
        t % 2 == 0 ? ConstraintSystem::Uniform(n, 1 + t % 3 % n)
                   : random_matroid(n, MatroidKind::kGraphic, rng);
    const AuctionSpec spec = random_auction(n, max_value, std::move(feasibility), rng);
    std::vector<std::vector<double>> z(n);
    for (auto& chain : z) {
      for (std::size_t c = 0; c <= max_value; ++c) chain.push_back(uniform01(rng));
      std::sort(chain.begin(), chain.end());
    }
    auto scaled = [&](double s) {
      auto out = z;
      for (auto& chain : out) {
        for (double& v : chain) v *= s;
      }
      return out;
    };
    double lo = 0.0;
    double hi = 1.0;
    if (is_lp_m_feasible(spec, z)) {
      lo = 1.0;
    } else {
      for (int it = 0; it < 50; ++it) {
        const double mid = 0.5 * (lo + hi);
        (is_lp_m_feasible(spec, scaled(mid)) ? lo : hi) = mid;
      }
    }
    z = scaled(lo);
    const auto y = lp_m_to_lp_p(spec, z);
    const ProbingInstance inst = build_probing_instance(spec);
    double lp_p = 0.0;
    for (ElementId e = 0; e < inst.size(); ++e) lp_p += inst.weight(e) * inst.p(e) * y[e];
    const double diff = std::abs(lp_p - lp_m_objective(spec, z));
    worst = std::max(worst, diff);
    if (!is_lp_feasible(inst, y) || diff > 1e-9) ++failures;
  }
  r.passed = failures == 0;
  r.metrics = {{"points", kPoints}, {"failures", failures}, {"max_objective_gap", worst}};
  r.summary = std::to_string(kPoints) + " LP_M points, " + std::to_string(failures) +
              " failures, max objective gap " + fmt("%.3g", worst);
}

void deadline_ratio(std::uint64_t seed, CriterionResult& r) {
  RandomInstanceOptions options;
  options.max_size = 8;
  options.deadlines = true;
  const auto suite = ratio_suite(seed, 100, options);
  std::size_t failures = 0;
  std::size_t path_failures = 0;
  std::size_t paths_checked = 0;
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& s : suite) {
    const double greedy = exact_deadline_greedy_value(s.instance).realized;
    const double opt = optimal_adaptive_deadline(s.instance);
    const double factor = 2.0 * (s.k_in + s.k_out + 1);
    if (greedy < opt / factor - 1e-9) ++failures;
    if (opt > 0.0) worst = std::min(worst, greedy * factor / opt);
    for (const PathOutcome& path : enumerate_deadline_paths(s.instance)) {
      double all = 0.0;
      double kept = 0.0;
      for (ElementId e : path.probed) {
        all += s.instance.p(e);
        if (!path.skipped_deadline.contains(e)) kept += s.instance.p(e);
      }
      ++paths_checked;
      if (all > 2.0 * kept + 1e-12) ++path_failures;
    }
  }
  r.passed = failures == 0 && path_failures == 0;
  r.metrics = {{"instances", suite.size()},
               {"failures", failures},
               {"paths", paths_checked},
               {"path_failures", path_failures},
               {"min_ratio_times_factor", worst}};
  r.summary = std::to_string(suite.size()) + " instances, min 2(k_in+k_out+1) greedy/OPT = " +
              fmt("%.4f", worst) + ", " + std::to_string(path_failures) + " path failures";
}

void appendix_separation(std::uint64_t seed, CriterionResult& r) {
  constexpr std::size_t kTrials = 100000;
  constexpr double kBaselineB = 1.0;
  Json fixtures = Json::array();
  bool all = true;
  std::uint64_t stream = 0;
  for (const AppendixFixture& f : load_appendix_fixtures(10)) {
    const FractionalSolution lp = solve_probing_lp(f.instance);
    RoundingConfig config = default_rounding_config(f.instance);
    config.seed = derive_seed(seed, ++stream);
    const double g = rounding_guarantee(f.instance, config);
    const double bound = g * lp.objective;
    const auto baseline =
        simulate(baseline_policy(f, kBaselineB), f.instance, kTrials, derive_seed(seed, ++stream));
    const auto algorithm =
        estimate_policy_value(f.instance, lp, config, kTrials, derive_seed(seed, ++stream));
    const bool separated = baseline.mean < 0.5 * bound;
    const bool meets = algorithm.mean >= bound - 3.0 * sigma_of(algorithm.radius);
    all = all && separated && meets;
    fixtures.push_back({{"fixture", f.name},
                        {"lp", lp.objective},
                        {"guarantee", g},
                        {"bound", bound},
                        {"baseline_mean", baseline.mean},
                        {"baseline_radius", baseline.radius},
                        {"baseline_over_bound", baseline.mean / bound},
                        {"algorithm_mean", algorithm.mean},
                        {"algorithm_radius", algorithm.radius},
                        {"separated", separated},
                        {"algorithm_meets_bound", meets}});
    r.summary += (r.summary.empty() ? "" : "; ") + f.name + " baseline/bound " +
                 fmt("%.3f", baseline.mean / bound) + (meets ? "" : " (algorithm below bound)");
  }
  r.passed = all;
  r.metrics = {{"trials", kTrials}, {"baseline_b", kBaselineB}, {"fixtures", fixtures}};
}

struct CriterionDef {
  const char* name;
  void (*run)(std::uint64_t, CriterionResult&);
  double budget;
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"unweighted greedy ratio", unweighted_ratio, 60.0},
    {"dual certificates", dual_certificates, 0.0},
    {"tightness fixture", tightness, 0.0},
    {"LP upper bound", lp_upper_bound, 0.0},
    {"contention resolution bounds", cr_bounds, 120.0},
    {"weighted rounding bound", rounding_bound, 0.0},
    {"corollary constant", corollary_constant, 0.0},
    {"posted-price revenue", spm_revenue, 120.0},
    {"LP_M to LP_P transformer", transformer, 0.0},
    {"deadline greedy ratio", deadline_ratio, 0.0},
    {"appendix separation", appendix_separation, 0.0},
};

}  // namespace

std::string criterion_name(int id) {
  if (id < 1 || id > kCriterionCount) {
    throw DomainError("no acceptance criterion " + std::to_string(id));
  }
  return kCriteria[id - 1].name;
}

CriterionResult run_criterion(int id, std::uint64_t seed) {
  CriterionResult r;
  r.id = id;
  r.name = criterion_name(id);
  const CriterionDef& def = kCriteria[id - 1];
  r.budget_seconds = def.budget;
  const auto start = std::chrono::steady_clock::now();
  try {
    def.run(derive_seed(seed, static_cast<std::uint64_t>(id)), r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.summary = std::string("error: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (def.budget > 0.0 && r.seconds > def.budget) {
    r.passed = false;
    r.summary += " (over the " + fmt("%.0f", def.budget) + " s budget)";
  }
  return r;
}

std::vector<CriterionResult> run_acceptance(
    const AcceptanceOptions& options,
    const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), id) == options.only.end()) {
      continue;
    }
    out.push_back(run_criterion(id, options.seed));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result_line(const CriterionResult& result) {
  char head[32];
  std::snprintf(head, sizeof head, "%s  C%-2d ", result.passed ? "PASS" : "FAIL", result.id);
  return head + result.name + ": " + result.summary + " (" + fmt("%.1f", result.seconds) +
         " s)";
}

nlohmann::ordered_json result_to_json(const CriterionResult& result) {
  return {{"id", result.id},
          {"name", result.name},
          {"passed", result.passed},
          {"summary", result.summary},
          {"metrics", result.metrics}};
}

}  // namespace probing
