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

#include "bellconf/errors.h"
#include "bellconf/stats/stats.h"

namespace bellconf::stats {
namespace {

void require_same_length(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw ArgumentError("input lengths differ");
  if (x.size() < 2) throw ArgumentError("need at least two observations");
}

}  // namespace

double mean(std::span<const double> x) {
  if (x.empty()) throw ArgumentError("mean of empty sample");
  double s = 0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_sd(std::span<const double> x) {
  if (x.size() < 2) throw ArgumentError("sample_sd needs n >= 2");
  double m = mean(x);
  double ss = 0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

Summary summarize(std::span<const double> x) {
  Summary s;
  s.n = x.size();
  s.mean = mean(x);
  if (x.size() < 2) {
    s.ci95 = {s.mean, s.mean};
    return s;
  }
  s.sd = sample_sd(x);
  s.stderr_mean = s.sd / std::sqrt(static_cast<double>(x.size()));
  double t = student_t_quantile(0.975, static_cast<double>(x.size() - 1));
  s.ci95 = {s.mean - t * s.stderr_mean, s.mean + t * s.stderr_mean};
  return s;
}

double pearson_r(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  double mx = mean(x), my = mean(y);
  double sxy = 0, sxx = 0, syy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0 || syy == 0) throw ArgumentError("pearson_r is undefined for constant input");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

double r_squared(std::span<const double> observed, std::span<const double> predicted) {
  require_same_length(observed, predicted);
  double m = mean(observed);
  double ss_res = 0, ss_tot = 0;
  for (size_t i = 0; i < observed.size(); ++i) {
    ss_res += (observed[i] - predicted[i]) * (observed[i] - predicted[i]);
    ss_tot += (observed[i] - m) * (observed[i] - m);
  }
  if (ss_tot == 0) throw ArgumentError("r_squared is undefined for constant observations");
  return 1.0 - ss_res / ss_tot;
}

LinearFit linear_fit(std::span<const double> x, std::span<const double> y) {
  require_same_length(x, y);
  double mx = mean(x), my = mean(y);
  double sxy = 0, sxx = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  if (sxx == 0) throw ArgumentError("linear_fit needs non-constant x");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  return fit;
}

}  // namespace bellconf::stats
