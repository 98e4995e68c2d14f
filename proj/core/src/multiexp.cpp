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

#include "expentropy/multiexp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "checks.hpp"

namespace expentropy {

MultiExpModel::MultiExpModel(std::vector<ExpComponent> components)
    : components_(std::move(components)) {
  if (components_.empty()) {
    throw ValidationError("multi-exponential model needs at least one component");
  }
  double weight_sum = 0.0;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    const auto& [a, c] = components_[i];
    const auto label = "component " + std::to_string(i + 1);
    if (!std::isfinite(a) || a <= 0.0) {
      throw ValidationError(label + ": weight A must be > 0, got " +
                            detail::describe(a));
    }
    if (!std::isfinite(c) || c <= 0.0) {
      throw ValidationError(label + ": rate c must be > 0, got " +
                            detail::describe(c));
    }
    weight_sum += a;
  }
  if (std::abs(weight_sum - 1.0) > kWeightSumTolerance) {
    throw ValidationError("weights must sum to 1, got sum " +
                          detail::describe(weight_sum));
  }
  // Sums already within summation rounding of 1 are left alone so that
  // normalizing twice is a no-op.
  const double rounding = 16.0 * static_cast<double>(components_.size()) *
                          std::numeric_limits<double>::epsilon();
  if (std::abs(weight_sum - 1.0) > rounding) {
    for (auto& comp : components_) comp.weight /= weight_sum;
  }

  std::stable_sort(components_.begin(), components_.end(),
                   [](const ExpComponent& x, const ExpComponent& y) {
                     return x.rate > y.rate;
                   });
  for (std::size_t i = 1; i < components_.size(); ++i) {
    if (components_[i].rate == components_[i - 1].rate) {
      throw ValidationError("rates must be distinct, c = " +
                            detail::describe(components_[i].rate) +
                            " appears twice");
    }
  }
  if (std::abs(components_.front().rate - 1.0) > kLeadingRateTolerance) {
    throw ValidationError("largest rate c_1 must be 1, got " +
                          detail::describe(components_.front().rate));
  }
}

namespace {

void require_time(double scaled_time) {
  detail::require_nonnegative_time(scaled_time, "T");
}

}  // namespace

double multiexp_probability(const MultiExpModel& model, double scaled_time) {
  require_time(scaled_time);
  // Every exp(-c * 0) is 1 and the weights sum to one.
  if (scaled_time == 0.0) return 1.0;
  double p = 0.0;
  for (const auto& [a, c] : model.components()) p += a * std::exp(-c * scaled_time);
  return p;
}

double multiexp_entropy(const MultiExpModel& model, double scaled_time) {
  require_time(scaled_time);
  if (scaled_time == 0.0) return 0.0;

  // ln p = m + log1p(sum over the others of exp(l_i - m)), with
  // l_i = ln A_i - c_i T and m the largest l_i.
  const auto comps = model.components();
  std::size_t lead = 0;
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const double l = std::log(comps[i].weight) - comps[i].rate * scaled_time;
    if (l > m) {
      m = l;
      lead = i;
    }
  }
  double rest = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (i == lead) continue;
    rest += std::exp(std::log(comps[i].weight) - comps[i].rate * scaled_time - m);
  }
  return -(m + std::log1p(rest));
}

double multiexp_entropy_asymptote(const MultiExpModel& model,
                                  double scaled_time) {
  require_time(scaled_time);
  const auto& slow = model.slowest();
  return scaled_time * slow.rate - std::log(slow.weight);
}

double mrt_closed_form(const MultiExpModel& model) {
  double area = 0.0;
  double first_moment = 0.0;
  for (const auto& [a, c] : model.components()) {
    area += a / c;
    first_moment += a / (c * c);
  }
  return first_moment / area;
}

double normalized_entropy(const MultiExpModel& model, double scaled_time,
                          double scaled_time_max) {
  if (!std::isfinite(scaled_time_max) || scaled_time_max <= 0.0) {
    throw DomainError("T_max must be > 0, got " +
                      detail::describe(scaled_time_max));
  }
  require_time(scaled_time);
  if (scaled_time > scaled_time_max) {
    throw DomainError("T = " + detail::describe(scaled_time) +
                      " exceeds T_max = " + detail::describe(scaled_time_max));
  }
  return multiexp_entropy(model, scaled_time) /
         multiexp_entropy(model, scaled_time_max);
}

double multiexp_sample_space_size(const MultiExpModel& model,
                                  double scaled_time, double s0) {
  if (!std::isfinite(s0) || s0 < 1.0) {
    throw ValidationError("s0 must be >= 1, got " + detail::describe(s0));
  }
  const double p = multiexp_probability(model, scaled_time);
  if (p == 0.0) return std::numeric_limits<double>::infinity();
  return s0 / p;
}

std::vector<double> component_probabilities(const MultiExpModel& model,
                                            double scaled_time) {
  require_time(scaled_time);
  std::vector<double> out;
  out.reserve(model.size());
  for (const auto& [a, c] : model.components()) {
    out.push_back(a * std::exp(-c * scaled_time));
  }
  return out;
}

std::vector<double> component_entropies(const MultiExpModel& model,
                                        double scaled_time) {
  require_time(scaled_time);
  std::vector<double> out;
  out.reserve(model.size());
  for (const auto& [a, c] : model.components()) {
    out.push_back(c * scaled_time - std::log(a));
  }
  return out;
}

}  // namespace expentropy
