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
#ifndef PROBING_VALUE_REPORT_HPP_
#define PROBING_VALUE_REPORT_HPP_

#include <cmath>
#include <cstddef>
#include <string_view>

namespace probing {

enum class ValueMethod { kExact, kMonteCarlo, kOracle };

inline std::string_view to_string(ValueMethod m) {
  switch (m) {
    case ValueMethod::kExact:
      return "exact";
    case ValueMethod::kMonteCarlo:
      return "monte_carlo";
    case ValueMethod::kOracle:
      return "oracle";
  }
  return "unknown";
}

struct PolicyValueReport {
  double mean = 0.0;
  double radius = 0.0;     // 99% normal-approximation half width; 0 if exact
  std::size_t trials = 0;  // 0 if exact
  ValueMethod method = ValueMethod::kExact;

  static PolicyValueReport Exact(double value, ValueMethod m = ValueMethod::kExact) {
    return {value, 0.0, 0, m};
  }
};

// Welford accumulator producing a Monte Carlo report.
class MeanAccumulator {
 public:
  void add(double x) {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  PolicyValueReport report() const {
    PolicyValueReport r;
    r.mean = mean_;
    r.trials = n_;
    r.method = ValueMethod::kMonteCarlo;
    if (n_ > 1) {
      const double var = m2_ / static_cast<double>(n_ - 1);
      r.radius = 2.58 * std::sqrt(var / static_cast<double>(n_));
    }
    return r;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace probing

#endif  // PROBING_VALUE_REPORT_HPP_
