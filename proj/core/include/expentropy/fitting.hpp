// Copyright 2026 The expentropy Authors.
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

#include <string>
#include <vector>

#include "expentropy/mono.hpp"

namespace expentropy {

struct SeriesPoint {
  double t;      // offset from the origin, in years
  double value;  // positive magnitude in series units

  bool operator==(const SeriesPoint&) const = default;
};

struct TimeSeries {
  std::string origin_label;
  std::vector<SeriesPoint> points;

  /// Throws ValidationError unless there are >= 2 points, t is strictly
  /// increasing and every value is positive.
  void validate() const;

  bool operator==(const TimeSeries&) const = default;
};

struct FitResult {
  double s0_hat = 0.0;
  double lambda_hat = 0.0;
  double r_squared = 0.0;      // log space, in [0, 1]
  double r_squared_raw = 0.0;  // raw space; may be negative for bad fits
  std::vector<double> residuals_log;

  MonoExpModel model() const { return {s0_hat, lambda_hat}; }
};

/// Ordinary least squares of ln(value) on t.
FitResult fit_mono_exponential(const TimeSeries& series);

/// exp(lambda) - 1: the mean fractional increase per unit time.
double annual_growth_rate(double lambda);

struct TimedValue {
  double t;
  double value;
};

/// H(t) = lambda_hat * t for each t >= 0.
std::vector<TimedValue> entropy_series(const FitResult& fit,
                                       const std::vector<double>& times);

/// p(t) = exp(-lambda_hat * t), relative to the t = 0 sample space.
std::vector<TimedValue> probability_series(const FitResult& fit,
                                           const std::vector<double>& times);

/// Series sampled exactly from s0 * exp(lambda * t) at the given offsets.
TimeSeries generate_series(const MonoExpModel& model,
                           const std::vector<double>& times,
                           std::string origin_label = "0");

}  // namespace expentropy
