// Copyright 2026 The bellconf Authors
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

#include <algorithm>
#include <cmath>
#include <limits>

#include "bellconf/errors.h"
#include "bellconf/stats/stats.h"

namespace bellconf::stats {
namespace {

struct Moments {
  double n;
  double mean;
  double var;
};

Moments moments(std::span<const double> x) {
  if (x.size() < 2) throw ArgumentError("t-test needs at least two observations per sample");
  double sd = sample_sd(x);
  return {static_cast<double>(x.size()), mean(x), sd * sd};
}

TestResult from_t(double t, double df) {
  TestResult r;
  r.statistic = t;
  r.degrees_of_freedom = df;
  r.p_value = std::clamp(2.0 * student_t_cdf(-std::abs(t), df), 0.0, 1.0);
  return r;
}

// Zero-variance convention shared by every t-test.
TestResult degenerate(double mean_difference, double df) {
  TestResult r;
  r.degrees_of_freedom = df;
  if (mean_difference == 0) {
    r.statistic = 0;
    r.p_value = 1;
  } else {
    r.statistic = std::copysign(std::numeric_limits<double>::infinity(), mean_difference);
    r.p_value = 0;
  }
  return r;
}

}  // namespace

Interval wilson_interval(uint64_t successes, uint64_t n, double confidence) {
  if (n == 0) throw ArgumentError("wilson_interval needs n >= 1");
  if (successes > n) throw ArgumentError("wilson_interval needs successes <= n");
  if (!(confidence > 0 && confidence < 1)) throw ArgumentError("confidence must be in (0, 1)");
  double z = confidence == 0.95 ? kZ95 : normal_quantile(0.5 + confidence / 2);
  double nn = static_cast<double>(n);
  double p = static_cast<double>(successes) / nn;
  double z2 = z * z;
  double denom = 1.0 + z2 / nn;
  double center = (p + z2 / (2 * nn)) / denom;
  double half = z * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  Interval iv{std::max(0.0, center - half), std::min(1.0, center + half)};
  // Rounding can push an endpoint past p-hat at the boundaries.
  iv.lo = std::min(iv.lo, p);
  iv.hi = std::max(iv.hi, p);
  return iv;
}

TestResult welch_t_test(std::span<const double> a, std::span<const double> b) {
  Moments x = moments(a), y = moments(b);
  double va = x.var / x.n, vb = y.var / y.n;
  double se2 = va + vb;
  if (se2 == 0) return degenerate(x.mean - y.mean, x.n + y.n - 2);
  double t = (x.mean - y.mean) / std::sqrt(se2);
  double df = se2 * se2 / (va * va / (x.n - 1) + vb * vb / (y.n - 1));
  return from_t(t, df);
}

TestResult pooled_t_test(std::span<const double> a, std::span<const double> b) {
  Moments x = moments(a), y = moments(b);
  double df = x.n + y.n - 2;
  double pooled = ((x.n - 1) * x.var + (y.n - 1) * y.var) / df;
  double se2 = pooled * (1 / x.n + 1 / y.n);
  if (se2 == 0) return degenerate(x.mean - y.mean, df);
  return from_t((x.mean - y.mean) / std::sqrt(se2), df);
}

TestResult paired_t_test(std::span<const double> diffs) {
  Moments d = moments(diffs);
  if (d.var == 0) return degenerate(d.mean, d.n - 1);
  return from_t(d.mean / std::sqrt(d.var / d.n), d.n - 1);
}

TestResult two_proportion_z_test(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2) {
  if (n1 == 0 || n2 == 0 || k1 > n1 || k2 > n2) {
    throw ArgumentError("two_proportion_z_test needs 0 <= k <= n and n >= 1");
  }
  double p1 = static_cast<double>(k1) / n1, p2 = static_cast<double>(k2) / n2;
  double pooled = static_cast<double>(k1 + k2) / static_cast<double>(n1 + n2);
  double se2 = pooled * (1 - pooled) * (1.0 / n1 + 1.0 / n2);
  TestResult r;
  r.degrees_of_freedom = std::numeric_limits<double>::infinity();
  if (se2 == 0) {
    TestResult d = degenerate(p1 - p2, 1);
    d.degrees_of_freedom = r.degrees_of_freedom;
    return d;
  }
  r.statistic = (p1 - p2) / std::sqrt(se2);
  r.p_value = std::clamp(2.0 * normal_cdf(-std::abs(r.statistic)), 0.0, 1.0);
  return r;
}

}  // namespace bellconf::stats
