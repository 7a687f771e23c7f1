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
#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "probing/acceptance.hpp"
#include "probing/cr_schemes.hpp"
#include "probing/errors.hpp"
#include "probing/greedy.hpp"
#include "probing/io.hpp"
#include "probing/lp.hpp"
#include "probing/policy_eval.hpp"
#include "probing/rounding.hpp"
#include "probing/spm.hpp"

namespace probing::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string instance;
  std::uint64_t seed = kDefaultSeed;
  std::size_t trials = 100000;
  std::optional<double> b;
  std::string inner_scheme;
  std::string outer_scheme;
  std::size_t best_of = 20;
  bool strict = false;
  std::string format = "json";
  std::string policy = "greedy";
  std::string side = "inner";
  std::vector<int> criteria;
};

const std::map<std::string, CrSchemeSpec> kSchemes = {
    {"ordered", {SchemeKind::kOrdered, OrderPolicy::kCertified, 1.0}},
    {"ordered-certified", {SchemeKind::kOrdered, OrderPolicy::kCertified, 1.0}},
    {"ordered-weight", {SchemeKind::kOrdered, OrderPolicy::kByWeight, 1.0}},
    {"ordered-index", {SchemeKind::kOrdered, OrderPolicy::kByIndex, 1.0}},
    {"ordered-random", {SchemeKind::kOrdered, OrderPolicy::kRandom, 1.0}},
    {"partition-random", {SchemeKind::kPartitionRandom, OrderPolicy::kCertified, 1.0}},
};

std::string scheme_name(const CrSchemeSpec& s) {
  if (s.kind == SchemeKind::kPartitionRandom) return "partition-random";
  switch (s.order) {
    case OrderPolicy::kCertified:
      return "ordered-certified";
    case OrderPolicy::kByWeight:
      return "ordered-weight";
    case OrderPolicy::kByIndex:
      return "ordered-index";
    case OrderPolicy::kRandom:
      return "ordered-random";
  }
  return "ordered";
}

class InputError : public ProbingError {
 public:
  using ProbingError::ProbingError;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json metric(const PolicyValueReport& r) {
  Json m = {{"value", r.mean}, {"method", std::string(to_string(r.method))}};
  if (r.method == ValueMethod::kMonteCarlo) {
    m["trials"] = r.trials;
    m["radius"] = r.radius;
  }
  return m;
}

Json exact(double v) { return metric(PolicyValueReport::Exact(v)); }
Json oracle(double v) { return metric(PolicyValueReport::Exact(v, ValueMethod::kOracle)); }

Json ids(const std::vector<ElementId>& v) {
  Json out = Json::array();
  for (ElementId e : v) out.push_back(e);
  return out;
}

class Session {
 public:
  Session(const Options& o, Json& report, std::ostream& err)
      : o_(o), report_(report), err_(err) {}

  ProbingInstance instance() {
    auto parsed = parse_instance(read_file(o_.instance), {o_.strict});
    warn(parsed.warnings);
    return std::move(parsed.instance);
  }

  AuctionSpec auction() {
    auto parsed = parse_auction(read_file(o_.instance), {o_.strict});
    warn(parsed.warnings);
    return std::move(parsed.spec);
  }

  RoundingConfig rounding_config(const ProbingInstance& inst) const {
    RoundingConfig c = default_rounding_config(inst);
    if (o_.b) c.b = *o_.b;
    if (!o_.inner_scheme.empty()) c.inner_scheme = kSchemes.at(o_.inner_scheme);
    if (!o_.outer_scheme.empty()) c.outer_scheme = kSchemes.at(o_.outer_scheme);
    c.seed = o_.seed;
    return c;
  }

  Json& config() { return report_["config"]; }
  Json& metrics() { return report_["metrics"]; }

 private:
  void warn(const std::vector<std::string>& warnings) {
    for (const auto& w : warnings) {
      err_ << "warning: " << w << "\n";
      report_["warnings"].push_back(w);
    }
  }

  const Options& o_;
  Json& report_;
  std::ostream& err_;
};

Json k_config(const ProbingInstance& inst) {
  return {{"k_in", inst.inner().k_parameter()}, {"k_out", inst.outer().k_parameter()}};
}

void cmd_greedy(const Options& o, Session& s) {
  const ProbingInstance inst = s.instance();
  const auto order = greedy_order(inst);
  s.config() = k_config(inst);
  auto& m = s.metrics();
  m["order"] = ids(order);
  double value = 0.0;
  if (inst.size() <= kPathEnumerationCap) {
    const GreedyValue g = exact_greedy_value(inst);
    value = g.chosen_weight;
    m["greedy_value"] = exact(value);
    m["probed_mass"] = exact(g.probed_mass);
  } else {
    const auto r = simulate(order_policy(order), inst, o.trials, o.seed);
    value = r.mean;
    m["greedy_value"] = metric(r);
  }
  m["unweighted"] = inst.is_unweighted();
  if (inst.size() <= kAdaptiveCap) {
    const double opt = optimal_adaptive(inst);
    const int k = inst.inner().k_parameter() + inst.outer().k_parameter();
    m["optimal_adaptive"] = oracle(opt);
    m["ratio"] = opt > 0.0 ? value / opt : 1.0;
    m["bound"] = opt / k;
    m["bound_holds"] = value >= opt / k - 1e-9;
  }
}

void cmd_greedy_deadline(const Options& o, Session& s) {
  const ProbingInstance inst = s.instance();
  if (!inst.has_deadlines()) throw InputError("every element needs a deadline");
  s.config() = k_config(inst);
  auto& m = s.metrics();
  double value = 0.0;
  if (inst.size() <= kPathEnumerationCap) {
    const DeadlineValue d = exact_deadline_greedy_value(inst);
    value = d.realized;
    m["greedy_value"] = exact(d.realized);
    m["relaxed_value"] = exact(d.coupled);
  } else {
    MeanAccumulator acc;
    for_each_trial(o.seed, o.trials, [&](std::size_t, Rng& rng) {
      const PathOutcome path = run_greedy_deadline(inst, rng);
      acc.add(total_weight(inst, path.chosen - path.skipped_deadline));
    });
    value = acc.report().mean;
    m["greedy_value"] = metric(acc.report());
  }
  if (inst.size() <= kDeadlineAdaptiveCap) {
    const double opt = optimal_adaptive_deadline(inst);
    const double factor = 2.0 * (inst.inner().k_parameter() + inst.outer().k_parameter() + 1);
    m["optimal_adaptive"] = oracle(opt);
    m["ratio"] = opt > 0.0 ? value / opt : 1.0;
    m["bound"] = opt / factor;
    m["bound_holds"] = value >= opt / factor - 1e-9;
  }
}

Json lp_json(const FractionalSolution& lp) {
  Json cuts = Json::array();
  for (const LpCut& c : lp.cuts) {
    cuts.push_back({{"side", c.side == CutSide::kInner ? "inner" : "outer"},
                    {"members", ids(c.members.members())},
                    {"bound", c.bound}});
  }
  return {{"objective", lp.objective}, {"x", lp.x}, {"y", lp.y},
          {"rounds", lp.rounds}, {"cuts", cuts}};
}

void cmd_lp(const Options&, Session& s) {
  const ProbingInstance inst = s.instance();
  s.metrics()["lp"] = lp_json(solve_probing_lp(inst));
}

Json rounding_config_json(const RoundingConfig& c) {
  return {{"b", c.b},
          {"outer_scheme", scheme_name(c.outer_scheme)},
          {"inner_scheme", scheme_name(c.inner_scheme)},
          {"seed", c.seed}};
}

bool fixed_orders(const RoundingConfig& c) {
  return c.inner_scheme.order != OrderPolicy::kRandom &&
         !(c.outer_scheme.kind == SchemeKind::kOrdered &&
           c.outer_scheme.order == OrderPolicy::kRandom);
}

std::size_t support_size(const FractionalSolution& lp) {
  return static_cast<std::size_t>(
      std::count_if(lp.y.begin(), lp.y.end(), [](double v) { return v > 0.0; }));
}

// Exact when the marginals are enumerable, else simulated.
Json rounding_value(const ProbingInstance& inst, const FractionalSolution& lp,
                    const Rounder& rounder, const Options& o, double* value) {
  if (fixed_orders(rounder.config()) && support_size(lp) <= kPathEnumerationCap) {
    const auto marginal = rounder.exact_marginals();
    double v = 0.0;
    for (ElementId e = 0; e < inst.size(); ++e) v += inst.weight(e) * marginal[e];
    *value = v;
    return exact(v);
  }
  const auto r = estimate_policy_value(inst, lp, rounder.config(), o.trials, o.seed);
  *value = r.mean;
  return metric(r);
}

void cmd_round(const Options& o, Session& s) {
  const ProbingInstance inst = s.instance();
  const RoundingConfig config = s.rounding_config(inst);
  s.config() = rounding_config_json(config);
  const FractionalSolution lp = solve_probing_lp(inst);
  const Rounder rounder(inst, lp, config);
  Rng rng(o.seed);
  const NonAdaptivePolicy policy = rounder.round(rng);
  auto& m = s.metrics();
  m["lp_objective"] = lp.objective;
  m["guarantee"] = rounder.guarantee();
  m["bound"] = rounder.guarantee() * lp.objective;
  m["probe_sequence"] = ids(policy.probe_sequence);
  double value = 0.0;
  m["policy_value"] = rounding_value(inst, lp, rounder, o, &value);
  m["ratio"] = lp.objective > 0.0 ? value / lp.objective : 1.0;
}

void cmd_spm(const Options& o, Session& s) {
  const AuctionSpec spec = s.auction();
  const SpmBuilder builder(spec);
  const double lp_m = solve_lp_m(spec).objective;
  s.config() = {{"agents", spec.agents()},
                {"max_value", spec.max_value},
                {"k", builder.k()},
                {"b", builder.rounder().config().b},
                {"best_of", o.best_of},
                {"seed", o.seed}};
  if (o.best_of == 0) throw InputError("--best-of must be at least 1");
  const bool exact_mode = spec.agents() <= 12;
  Rng rng(o.seed);
  std::optional<SpmMechanism> best;
  PolicyValueReport best_value;
  double total = 0.0;
  for (std::size_t d = 0; d < o.best_of; ++d) {
    SpmMechanism mech = builder.draw(rng);
    const PolicyValueReport v =
        exact_mode ? PolicyValueReport::Exact(spm_revenue_exact(mech, spec))
                   : spm_revenue_monte_carlo(mech, spec, o.trials, derive_seed(o.seed, d));
    total += v.mean;
    if (!best || v.mean > best_value.mean) {
      best = std::move(mech);
      best_value = v;
    }
  }
  auto& m = s.metrics();
  m["lp_p"] = builder.lp().objective;
  m["lp_m"] = lp_m;
  m["bound"] = lp_m / (4.0 * builder.k() + 2.0);
  m["mean_revenue"] = exact_mode ? exact(total / o.best_of)
                                 : Json{{"value", total / o.best_of},
                                        {"method", "monte_carlo"},
                                        {"trials", o.trials}};
  m["revenue"] = metric(best_value);
  m["ratio"] = lp_m > 0.0 ? best_value.mean / lp_m : 1.0;
  m["mechanism"] = mechanism_to_json(*best);
}

void cmd_simulate(const Options& o, Session& s) {
  const ProbingInstance inst = s.instance();
  auto& m = s.metrics();
  if (o.policy == "greedy") {
    const auto order = greedy_order(inst);
    s.config() = {{"policy", "greedy"}, {"trials", o.trials}, {"seed", o.seed}};
    const auto r = simulate(order_policy(order), inst, o.trials, o.seed);
    m["simulated"] = metric(r);
    if (inst.size() <= kNonAdaptiveCap) {
      const double v = exact_nonadaptive_value(order, inst);
      m["exact"] = exact(v);
      m["within_4_radius"] = std::abs(r.mean - v) <= 4.0 * r.radius + 1e-12;
    }
    return;
  }
  const RoundingConfig config = s.rounding_config(inst);
  s.config() = rounding_config_json(config);
  s.config()["policy"] = "rounding";
  s.config()["trials"] = o.trials;
  const FractionalSolution lp = solve_probing_lp(inst);
  const Rounder rounder(inst, lp, config);
  const auto r = estimate_policy_value(inst, lp, config, o.trials, o.seed);
  m["simulated"] = metric(r);
  m["bound"] = rounder.guarantee() * lp.objective;
  if (fixed_orders(config) && support_size(lp) <= kPathEnumerationCap) {
    double v = 0.0;
    m["exact"] = rounding_value(inst, lp, rounder, o, &v);
    m["within_4_radius"] = std::abs(r.mean - v) <= 4.0 * r.radius + 1e-12;
  }
}

void cmd_oracle(const Options&, Session& s) {
  const ProbingInstance inst = s.instance();
  auto& m = s.metrics();
  m["optimal_adaptive"] = oracle(optimal_adaptive(inst));
  if (inst.has_deadlines()) {
    m["optimal_adaptive_deadline"] = oracle(optimal_adaptive_deadline(inst));
  }
}

void cmd_certify(const Options&, Session& s) {
  const ProbingInstance inst = s.instance();
  const int k_in = inst.inner().k_parameter();
  const int k_out = inst.outer().k_parameter();
  s.config() = k_config(inst);
  Json paths = Json::array();
  std::vector<std::pair<double, DualCertificate>> weighted;
  double expected = 0.0;
  bool all = true;
  for (const PathOutcome& path : enumerate_greedy_paths(inst)) {
    DualCertificate cert = build_dual_certificate(inst, path);
    const DualCheck check = check_dual(cert, inst);
    double mass = 0.0;
    for (ElementId e : path.probed) mass += inst.p(e);
    const double limit = k_in * static_cast<double>(path.chosen.size()) + k_out * mass;
    const bool ok = check.feasible && check.value <= limit + 1e-9;
    all = all && ok;
    paths.push_back({{"probed", ids(path.probed)},
                     {"chosen", ids(path.chosen.members())},
                     {"probability", path.probability},
                     {"dual_value", check.value},
                     {"dual_feasible", check.feasible},
                     {"limit", limit},
                     {"verdict", ok}});
    expected += path.probability * static_cast<double>(path.chosen.size());
    weighted.emplace_back(path.probability, std::move(cert));
  }
  const DualCheck combined = check_dual(combine(weighted), inst);
  auto& m = s.metrics();
  m["paths"] = paths;
  m["all_paths_certified"] = all;
  m["expected_chosen"] = exact(expected);
  m["combined_dual_value"] = combined.value;
  m["combined_feasible"] = combined.feasible;
  m["combined_limit"] = (k_in + k_out) * expected;
}

void cmd_verify_cr(const Options& o, Session& s) {
  const ProbingInstance inst = s.instance();
  if (o.side != "inner" && o.side != "outer") throw InputError("--side is inner or outer");
  const RoundingConfig config = s.rounding_config(inst);
  const bool inner = o.side == "inner";
  CrSchemeSpec spec = inner ? config.inner_scheme : config.outer_scheme;
  spec.b = config.b;
  const ConstraintSystem& system = inner ? inst.inner() : inst.outer();
  const FractionalSolution lp = solve_probing_lp(inst);
  const std::vector<double>& z = inner ? lp.x : lp.y;
  s.config() = {{"side", o.side}, {"scheme", scheme_name(spec)}, {"b", spec.b},
                {"trials", o.trials}, {"seed", o.seed}};
  const double target = scheme_target_c(spec, system);
  const auto est = verify_scheme(spec, system, z, o.trials, o.seed);
  Json elements = Json::array();
  bool all = true;
  for (ElementId e = 0; e < est.size(); ++e) {
    const bool ok = est[e].included == 0 ||
                    est[e].estimate >= target - 3.0 * est[e].radius / 2.58;
    all = all && ok;
    elements.push_back({{"element", e},
                        {"z", z[e]},
                        {"included", est[e].included},
                        {"kept", est[e].kept},
                        {"estimate", est[e].estimate},
                        {"radius", est[e].radius},
                        {"meets_target", ok}});
  }
  auto& m = s.metrics();
  m["target_c"] = target;
  m["elements"] = elements;
  m["all_meet_target"] = all;
}

void print_text(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      print_text(v, prefix.empty() ? k : prefix + "." + k, out);
    }
    return;
  }
  if (j.is_array() && std::any_of(j.begin(), j.end(),
                                  [](const Json& v) { return v.is_structured(); })) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
    }
    return;
  }
  std::string value = dump_json(j);
  value.pop_back();
  if (j.is_string()) value = j.get<std::string>();
  out << prefix << " = " << value << "\n";
}

int cmd_acceptance(const Options& o, std::ostream& out) {
  AcceptanceOptions ao;
  ao.seed = o.seed;
  ao.only = o.criteria;
  const bool text = o.format == "text";
  const auto results = run_acceptance(ao, [&](const CriterionResult& r) {
    if (text) out << format_result_line(r) << std::endl;
  });
  bool passed = true;
  Json criteria = Json::array();
  for (const auto& r : results) {
    passed = passed && r.passed;
    criteria.push_back(result_to_json(r));
  }
  if (text) {
    out << (passed ? "all criteria passed" : "some criteria failed") << "\n";
  } else {
    out << dump_json(Json{{"command", "acceptance"},
                          {"seed", o.seed},
                          {"passed", passed},
                          {"criteria", criteria}});
  }
  return passed ? kExitOk : kExitBoundFailure;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  Options o;
  CLI::App app{"Stochastic probing under inner and outer constraints", "probe"};
  app.require_subcommand(1);

  bool seed_given = false;
  auto add_common = [&](CLI::App* sub, bool needs_instance) {
    if (needs_instance) {
      sub->add_option("--instance", o.instance, "Instance (or auction) JSON file")->required();
      sub->add_flag("--strict", o.strict, "Reject unknown fields");
    }
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& v) { o.seed = v; seed_given = true; },
        "Master random seed");
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"json", "text"}));
  };
  auto add_trials = [&](CLI::App* sub) {
    sub->add_option("--trials", o.trials, "Monte Carlo trials")->check(CLI::PositiveNumber);
  };
  std::vector<std::string> scheme_names;
  for (const auto& [name, spec] : kSchemes) scheme_names.push_back(name);
  auto add_rounding = [&](CLI::App* sub) {
    sub->add_option("--b", o.b, "Sampling scale b in (0, 1]");
    sub->add_option("--inner-scheme", o.inner_scheme, "Inner CR scheme")
        ->check(CLI::IsMember(scheme_names));
    sub->add_option("--outer-scheme", o.outer_scheme, "Outer CR scheme")
        ->check(CLI::IsMember(scheme_names));
  };

  std::map<std::string, void (*)(const Options&, Session&)> handlers = {
      {"greedy", cmd_greedy},   {"greedy-deadline", cmd_greedy_deadline},
      {"lp", cmd_lp},           {"round", cmd_round},
      {"spm", cmd_spm},         {"simulate", cmd_simulate},
      {"oracle", cmd_oracle},   {"certify", cmd_certify},
      {"verify-cr", cmd_verify_cr},
  };
  const std::map<std::string, std::string> help = {
      {"greedy", "Greedy by probability, exact value and oracle ratio"},
      {"greedy-deadline", "Deadline-aware greedy"},
      {"lp", "Solve the probing LP"},
      {"round", "Round the LP into a non-adaptive policy"},
      {"spm", "Sequential posted-price mechanism for an auction file"},
      {"simulate", "Monte Carlo value of a policy"},
      {"oracle", "Optimal adaptive value by dynamic programming"},
      {"certify", "Dual certificates for every greedy path"},
      {"verify-cr", "Empirical contention resolution retention"},
  };
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, fn] : handlers) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    add_common(sub, true);
    subs[name] = sub;
  }
  for (const char* name : {"greedy", "greedy-deadline", "round", "spm", "simulate", "verify-cr"}) {
    add_trials(subs[name]);
  }
  for (const char* name : {"round", "simulate", "verify-cr"}) add_rounding(subs[name]);
  subs["spm"]->add_option("--best-of", o.best_of, "Mechanism draws to rank");
  subs["simulate"]->add_option("--policy", o.policy, "Policy to simulate")
      ->check(CLI::IsMember({"greedy", "rounding"}));
  subs["verify-cr"]->add_option("--side", o.side, "Constraint side")
      ->check(CLI::IsMember({"inner", "outer"}));
  CLI::App* acceptance = app.add_subcommand("acceptance", "Run the acceptance suite");
  add_common(acceptance, false);
  acceptance->add_option("--criterion", o.criteria, "Run only these criteria")
      ->check(CLI::Range(1, kCriterionCount));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (acceptance->parsed()) {
      if (!seed_given) {
        err << "error: acceptance runs need an explicit --seed\n";
        return kExitInputError;
      }
      return cmd_acceptance(o, out);
    }
    std::string command;
    for (const auto& [name, sub] : subs) {
      if (sub->parsed()) command = name;
    }
    Json report;
    std::string echo = "probe";
    for (const auto& a : args) echo += " " + a;
    report["command"] = echo;
    report["config"] = Json::object();
    report["metrics"] = Json::object();
    Session session(o, report, err);
    handlers.at(command)(o, session);
    report["config"]["seed"] = o.seed;
    if (o.format == "text") {
      print_text(report, "", out);
    } else {
      out << dump_json(report);
    }
    return kExitOk;
  } catch (const ProbingError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitInputError;
}

}  // namespace probing::cli
