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

#pragma once

#include <cstdint>
#include <span>
#include <utility>

namespace bellconf::stats {

/// z for a two-sided 95% interval, fixed so golden outputs are bit-stable.
inline constexpr double kZ95 = 1.959964;

struct TestResult {
  double statistic = 0;
  double degrees_of_freedom = 0;
  double p_value = 1;
  bool two_sided = true;
};

struct Interval {
  double lo = 0;
  double hi = 0;
};

struct Summary {
  size_t n = 0;
  double mean = 0;
  double sd = 0;      // n-1 denominator
  double stderr_mean = 0;
  Interval ci95;      // Student-t interval for the mean
};

// Distributions -------------------------------------------------------------

/// Regularized incomplete beta I_x(a, b), continued fraction by Lentz's
/// method (tolerance 1e-10, at most 300 iterations).
double regularized_incomplete_beta(double a, double b, double x);

double student_t_cdf(double t, double df);

/// Inverse of student_t_cdf by bisection.
double student_t_quantile(double p, double df);

double normal_cdf(double z);

/// Inverse of normal_cdf by bisection.
double normal_quantile(double p);

// Descriptive ---------------------------------------------------------------

double mean(std::span<const double> x);

/// Sample standard deviation, n-1 denominator. Requires n >= 2.
double sample_sd(std::span<const double> x);

Summary summarize(std::span<const double> x);

/// Pearson correlation. Throws ArgumentError for constant input or length
/// mismatch.
double pearson_r(std::span<const double> x, std::span<const double> y);

/// 1 - SS_res / SS_tot. May be negative.
double r_squared(std::span<const double> observed, std::span<const double> predicted);

/// Least-squares line y = slope * x + intercept.
struct LinearFit {
  double slope = 0;
  double intercept = 0;
};
LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// Intervals and tests -------------------------------------------------------

/// Wilson score interval for a binomial proportion. confidence = 0.95 uses
/// kZ95 exactly; other levels use normal_quantile.
Interval wilson_interval(uint64_t successes, uint64_t n, double confidence = 0.95);

/// Two-sided Welch t-test. When both variances are zero: equal means give
/// t = 0, p = 1; different means give t = +/-inf, p = 0.
TestResult welch_t_test(std::span<const double> a, std::span<const double> b);

/// Two-sided Student t-test with pooled variance.
TestResult pooled_t_test(std::span<const double> a, std::span<const double> b);

/// Two-sided paired t-test on differences (same degenerate conventions).
TestResult paired_t_test(std::span<const double> diffs);

/// Two-sided pooled two-proportion z-test.
TestResult two_proportion_z_test(uint64_t k1, uint64_t n1, uint64_t k2, uint64_t n2);

}  // namespace bellconf::stats
