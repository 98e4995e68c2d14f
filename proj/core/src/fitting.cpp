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

#include "expentropy/fitting.hpp"

#include <algorithm>
#include <cmath>

#include "checks.hpp"

namespace expentropy {

void TimeSeries::validate() const {
  if (points.size() < 2) {
    throw ValidationError("need at least 2 points, got " +
                          std::to_string(points.size()));
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& [t, v] = points[i];
    if (!std::isfinite(t)) {
      throw ValidationError("point " + std::to_string(i + 1) +
                            ": time is not finite");
    }
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError("point " + std::to_string(i + 1) +
                            ": nonpositive value " + detail::describe(v));
    }
    if (i > 0 && t <= points[i - 1].t) {
      throw ValidationError("point " + std::to_string(i + 1) +
                            ": time " + detail::describe(t) +
                            " is not after the previous point");
    }
  }
}

FitResult fit_mono_exponential(const TimeSeries& series) {
  const auto& pts = series.points;
  if (pts.size() < 2) {
    throw ValidationError("need at least 2 points, got " +
                          std::to_string(pts.size()));
  }
  for (const auto& [t, v] : pts) {
    if (!std::isfinite(t)) throw ValidationError("time is not finite");
    if (!std::isfinite(v) || v <= 0.0) {
      throw ValidationError("nonpositive value " + detail::describe(v));
    }
  }

  const auto n = static_cast<double>(pts.size());
  double t_mean = 0.0;
  double y_mean = 0.0;
  std::vector<double> logs;
  logs.reserve(pts.size());
  for (const auto& [t, v] : pts) {
    logs.push_back(std::log(v));
    t_mean += t;
    y_mean += logs.back();
  }
  t_mean /= n;
  y_mean /= n;

  // Centered sums keep the slope accurate when t carries a large offset.
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double dt = pts[i].t - t_mean;
    const double dy = logs[i] - y_mean;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (stt == 0.0) throw ValidationError("zero variance in time");

  FitResult fit;
  fit.lambda_hat = sty / stt;
  const double intercept = y_mean - fit.lambda_hat * t_mean;
  fit.s0_hat = std::exp(intercept);

  double ssr = 0.0;
  double ssr_raw = 0.0;
  double raw_mean = 0.0;
  for (const auto& p : pts) raw_mean += p.value;
  raw_mean /= n;
  double sst_raw = 0.0;
  fit.residuals_log.reserve(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double predicted = intercept + fit.lambda_hat * pts[i].t;
    const double r = logs[i] - predicted;
    fit.residuals_log.push_back(r);
    ssr += r * r;
    const double raw_r = pts[i].value - std::exp(predicted);
    ssr_raw += raw_r * raw_r;
    sst_raw += (pts[i].value - raw_mean) * (pts[i].value - raw_mean);
  }
  // A perfectly flat series is fitted exactly by a zero slope.
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ssr / syy, 0.0, 1.0) : 1.0;
  fit.r_squared_raw = sst_raw > 0.0 ? 1.0 - ssr_raw / sst_raw : 1.0;
  return fit;
}

double annual_growth_rate(double lambda) {
  if (!std::isfinite(lambda)) {
    throw DomainError("lambda must be finite, got " + detail::describe(lambda));
  }
  return std::expm1(lambda);
}

std::vector<TimedValue> entropy_series(const FitResult& fit,
                                       const std::vector<double>& times) {
  std::vector<TimedValue> out;
  out.reserve(times.size());
  for (double t : times) {
    detail::require_nonnegative_time(t, "t");
    out.push_back({t, fit.lambda_hat * t});
  }
  return out;
}

std::vector<TimedValue> probability_series(const FitResult& fit,
                                           const std::vector<double>& times) {
  std::vector<TimedValue> out;
  out.reserve(times.size());
  for (double t : times) {
    detail::require_nonnegative_time(t, "t");
    out.push_back({t, std::exp(-fit.lambda_hat * t)});
  }
  return out;
}

TimeSeries generate_series(const MonoExpModel& model,
                           const std::vector<double>& times,
                           std::string origin_label) {
  TimeSeries series{std::move(origin_label), {}};
  series.points.reserve(times.size());
  for (double t : times) {
    if (!std::isfinite(t)) throw DomainError("t must be finite");
    series.points.push_back({t, model.s0() * std::exp(model.lambda() * t)});
  }
  return series;
}

}  // namespace expentropy
