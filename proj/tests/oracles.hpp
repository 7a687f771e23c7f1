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
// Brute-force reference implementations shared by the unit tests. They use
// nothing from the library beyond its value types and independence queries.
#ifndef PROBING_TESTS_ORACLES_HPP_
#define PROBING_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "probing/constraint_system.hpp"
#include "probing/instance.hpp"

namespace oracle {

using probing::ConstraintSystem;
using probing::ElementId;
using probing::ElementSet;
using probing::ProbingInstance;

inline ElementSet from_mask(std::size_t n, std::uint64_t mask) {
  return ElementSet::FromMask(n, mask);
}

// Largest independent subset of s by trying every subset.
inline std::size_t rank(const ConstraintSystem& system, const ElementSet& s) {
  const auto members = s.members();
  std::size_t best = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << members.size()); ++m) {
    ElementSet t(system.universe_size());
    for (std::size_t i = 0; i < members.size(); ++i) {
      if ((m >> i) & 1u) t.insert(members[i]);
    }
    if (t.size() > best && system.is_independent(t)) best = t.size();
  }
  return best;
}

// Acyclicity by depth-first search over the chosen edges.
inline bool is_forest(std::size_t vertices,
                      const std::vector<std::pair<std::size_t, std::size_t>>& edges,
                      const ElementSet& s) {
  std::vector<std::vector<std::pair<std::size_t, ElementId>>> adj(vertices);
  for (ElementId e : s.members()) {
    const auto [a, b] = edges[e];
    if (a == b) return false;
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  std::vector<int> seen(vertices, 0);
  for (std::size_t root = 0; root < vertices; ++root) {
    if (seen[root]) continue;
    std::vector<std::pair<std::size_t, ElementId>> stack = {{root, ~ElementId{0}}};
    while (!stack.empty()) {
      const auto [v, via] = stack.back();
      stack.pop_back();
      if (seen[v]) return false;
      seen[v] = 1;
      for (const auto& [w, e] : adj[v]) {
        if (e != via) stack.push_back({w, e});
      }
    }
  }
  return true;
}

// max c.x over {A x <= b, x >= 0} by enumerating every basic solution;
// nullopt when infeasible. Only for a handful of variables.
inline std::optional<double> lp_by_vertices(const std::vector<double>& c,
                                            const std::vector<std::vector<double>>& a,
                                            const std::vector<double>& b) {
  const std::size_t n = c.size();
  std::vector<std::vector<double>> rows = a;
  std::vector<double> rhs = b;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<double> r(n, 0.0);
    r[j] = -1.0;
    rows.push_back(r);
    rhs.push_back(0.0);
  }
  const std::size_t m = rows.size();
  std::optional<double> best;
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t at,
                                                             std::size_t from) {
    if (at == n) {
      std::vector<std::vector<double>> mat(n, std::vector<double>(n + 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) mat[i][j] = rows[pick[i]][j];
        mat[i][n] = rhs[pick[i]];
      }
      for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t i = col; i < n; ++i) {
          if (std::abs(mat[i][col]) > std::abs(mat[piv][col])) piv = i;
        }
        if (std::abs(mat[piv][col]) < 1e-12) return;
        std::swap(mat[col], mat[piv]);
        for (std::size_t i = 0; i < n; ++i) {
          if (i == col) continue;
          const double f = mat[i][col] / mat[col][col];
          for (std::size_t j = col; j <= n; ++j) mat[i][j] -= f * mat[col][j];
        }
      }
      std::vector<double> x(n);
      for (std::size_t i = 0; i < n; ++i) x[i] = mat[i][n] / mat[i][i];
      for (std::size_t i = 0; i < m; ++i) {
        double lhs = 0.0;
        for (std::size_t j = 0; j < n; ++j) lhs += rows[i][j] * x[j];
        if (lhs > rhs[i] + 1e-9) return;
      }
      double v = 0.0;
      for (std::size_t j = 0; j < n; ++j) v += c[j] * x[j];
      if (!best || v > *best) best = v;
      return;
    }
    for (std::size_t i = from; i < m; ++i) {
      pick[at] = i;
      choose(at + 1, i + 1);
    }
  };
  choose(0, 0);
  return best;
}

// Plain recursion over every adaptive decision: probe any element allowed
// by both constraints or stop.
inline double optimal_adaptive(const ProbingInstance& inst) {
  std::function<double(const ElementSet&, const ElementSet&)> best =
      [&](const ElementSet& q, const ElementSet& s) {
        double v = 0.0;
        for (ElementId e = 0; e < inst.size(); ++e) {
          if (q.contains(e) || !inst.outer().is_independent(q.with(e)) ||
              !inst.inner().is_independent(s.with(e))) {
            continue;
          }
          const double p = inst.p(e);
          double value = 0.0;
          if (p > 0.0) value += p * (inst.weight(e) + best(q.with(e), s.with(e)));
          if (p < 1.0) value += (1.0 - p) * best(q.with(e), s);
          v = std::max(v, value);
        }
        return v;
      };
  return best(ElementSet(inst.size()), ElementSet(inst.size()));
}

// Same with a clock: the t-th probe (1-based) may target e only if t <= d_e.
inline double optimal_adaptive_deadline(const ProbingInstance& inst) {
  std::function<double(const ElementSet&, const ElementSet&)> best =
      [&](const ElementSet& q, const ElementSet& s) {
        const int t = static_cast<int>(q.size()) + 1;
        double v = 0.0;
        for (ElementId e = 0; e < inst.size(); ++e) {
          if (q.contains(e) || t > *inst.element(e).deadline ||
              !inst.outer().is_independent(q.with(e)) ||
              !inst.inner().is_independent(s.with(e))) {
            continue;
          }
          const double p = inst.p(e);
          v = std::max(v, p * (inst.weight(e) + best(q.with(e), s.with(e))) +
                              (1.0 - p) * best(q.with(e), s));
        }
        return v;
      };
  return best(ElementSet(inst.size()), ElementSet(inst.size()));
}

// E[f(activity)] over all 2^n activity vectors.
inline double expectation(const ProbingInstance& inst,
                          const std::function<double(const std::vector<bool>&)>& f) {
  const std::size_t n = inst.size();
  double total = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    std::vector<bool> active(n);
    double prob = 1.0;
    for (std::size_t e = 0; e < n; ++e) {
      active[e] = (m >> e) & 1u;
      prob *= active[e] ? inst.p(e) : 1.0 - inst.p(e);
    }
    if (prob > 0.0) total += prob * f(active);
  }
  return total;
}

// Probes along order when both constraints allow; value of one activity
// vector.
inline double order_value(const ProbingInstance& inst,
                          const std::vector<ElementId>& order,
                          const std::vector<bool>& active) {
  ElementSet q(inst.size());
  ElementSet s(inst.size());
  double w = 0.0;
  for (ElementId e : order) {
    if (!inst.outer().is_independent(q.with(e)) ||
        !inst.inner().is_independent(s.with(e))) {
      continue;
    }
    q.insert(e);
    if (active[e]) {
      s.insert(e);
      w += inst.weight(e);
    }
  }
  return w;
}

// E[1 / (1 + K)], K the number of successes among independent trials q.
inline double inverse_one_plus(const std::vector<double>& q) {
  double total = 0.0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << q.size()); ++m) {
    double prob = 1.0;
    int k = 0;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if ((m >> i) & 1u) {
        prob *= q[i];
        ++k;
      } else {
        prob *= 1.0 - q[i];
      }
    }
    total += prob / (1.0 + k);
  }
  return total;
}

}  // namespace oracle

#endif  // PROBING_TESTS_ORACLES_HPP_
