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

#include <span>
#include <vector>

namespace expentropy {

/// One term A * exp(-c * T) of a multi-exponential probability.
struct ExpComponent {
  double weight;  // A
  double rate;    // c, scaled so the fastest component has c = 1

  bool operator==(const ExpComponent&) const = default;
};

/**
 * Probability of the reference partition under multi-exponential expansion,
 *
 *     p(T) = sum_i A_i exp(-c_i T),   sum_i A_i = 1.
 *
 * Components are kept sorted by strictly decreasing rate, so the first one
 * has c = 1 and the last one is the slowest (it dominates at large T).
 * Weights that sum to 1 within 1e-9 are renormalized; anything further off
 * is rejected.
 */
class MultiExpModel {
 public:
  static constexpr double kWeightSumTolerance = 1e-9;
  static constexpr double kLeadingRateTolerance = 1e-12;

  /// Throws ValidationError on any invariant violation.
  explicit MultiExpModel(std::vector<ExpComponent> components);

  std::span<const ExpComponent> components() const noexcept {
    return components_;
  }
  std::size_t size() const noexcept { return components_.size(); }
  const ExpComponent& slowest() const noexcept { return components_.back(); }

  bool operator==(const MultiExpModel&) const = default;

 private:
  std::vector<ExpComponent> components_;
};

double multiexp_probability(const MultiExpModel& model, double scaled_time);

/// -ln p(T), evaluated in log-sum-exp form so it stays finite after p(T)
/// has underflowed to zero.
double multiexp_entropy(const MultiExpModel& model, double scaled_time);

/// Large-T line T * c_n - ln(A_n) of the slowest component.
double multiexp_entropy_asymptote(const MultiExpModel& model,
                                  double scaled_time);

/// Mean residence time (sum A/c^2) / (sum A/c), in scaled time.
double mrt_closed_form(const MultiExpModel& model);

/// H(T) / H(T_max) for 0 <= T <= T_max, T_max > 0.
double normalized_entropy(const MultiExpModel& model, double scaled_time,
                          double scaled_time_max);

/// s(T) = s0 / p(T). Returns +inf once p(T) underflows.
double multiexp_sample_space_size(const MultiExpModel& model,
                                  double scaled_time, double s0 = 1.0);

/// A_i exp(-c_i T) for every component, in model order.
std::vector<double> component_probabilities(const MultiExpModel& model,
                                            double scaled_time);

/// c_i T - ln(A_i): the entropy each component would carry on its own.
std::vector<double> component_entropies(const MultiExpModel& model,
                                        double scaled_time);

}  // namespace expentropy
