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
#include "probing/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "probing/errors.hpp"

namespace probing {
namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kRatioTieTol = 1e-12;
constexpr std::size_t kMaxPivots = 1000000;

}  // namespace

void LinearProgram::add_row(std::vector<double> row, double bound) {
  rows.push_back(std::move(row));
  rhs.push_back(bound);
}

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t n = lp.num_vars();
  const std::size_t m = lp.rows.size();
  if (lp.rhs.size() != m) throw DomainError("lp: one rhs per row required");

  // basic_i = b_i - sum_j a[i][j] * nonbasic_j ;  z = z0 + sum_j c_j * nonbasic_j
  std::vector<double> a(m * n);
  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    if (lp.rows[i].size() != n) throw DomainError("lp: ragged constraint row");
    if (!(lp.rhs[i] >= 0.0)) {
      throw DomainError("lp: rhs " + std::to_string(i) + " is negative");
    }
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = lp.rows[i][j];
    b[i] = lp.rhs[i];
  }
  std::vector<double> c = lp.objective;
  double z = 0.0;
  // Labels: [0, n) structural, [n, n + m) slack.
  std::vector<std::size_t> nonbasic(n);
  std::vector<std::size_t> basic(m);
  for (std::size_t j = 0; j < n; ++j) nonbasic[j] = j;
  for (std::size_t i = 0; i < m; ++i) basic[i] = n + i;

  LpSolution out;
  for (;;) {
    std::size_t q = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (c[j] > kPivotTol && (q == n || nonbasic[j] < nonbasic[q])) q = j;
    }
    if (q == n) break;

    std::size_t r = m;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double coef = a[i * n + q];
      if (coef <= kPivotTol) continue;
      const double ratio = b[i] / coef;
      if (r == m || ratio < best - kRatioTieTol ||
          (ratio <= best + kRatioTieTol && basic[i] < basic[r])) {
        best = std::min(best, ratio);
        r = i;
      }
    }
    if (r == m) throw ProbingError("lp: objective is unbounded");
    if (++out.pivots > kMaxPivots) throw ProbingError("lp: pivot limit hit");

    const double piv = a[r * n + q];
    double* row_r = &a[r * n];
    for (std::size_t j = 0; j < n; ++j) row_r[j] /= piv;
    row_r[q] = 1.0 / piv;
    b[r] /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r) continue;
      double* row_i = &a[i * n];
      const double f = row_i[q];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) row_i[j] -= f * row_r[j];
      row_i[q] = -f * row_r[q];
      b[i] -= f * b[r];
      if (b[i] < 0.0 && b[i] > -kPivotTol) b[i] = 0.0;
    }
    const double f = c[q];
    for (std::size_t j = 0; j < n; ++j) c[j] -= f * row_r[j];
    c[q] = -f * row_r[q];
    z += f * b[r];
    std::swap(basic[r], nonbasic[q]);
  }

  out.x.assign(n, 0.0);
  out.duals.assign(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    if (basic[i] < n) out.x[basic[i]] = b[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (nonbasic[j] >= n) out.duals[nonbasic[j] - n] = -c[j];
  }
  out.objective = 0.0;
  for (std::size_t j = 0; j < n; ++j) out.objective += lp.objective[j] * out.x[j];
  return out;
}

}  // namespace probing
