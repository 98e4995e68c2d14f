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

#include "expentropy/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "checks.hpp"

namespace expentropy {

ContractionModel::ContractionModel(double s0)
    : s0_(s0), t_max_(contraction_t_max(s0)) {}

double contraction_t_max(double s0) {
  if (!std::isfinite(s0) || s0 < 2.0) {
    throw ValidationError("contraction needs s0 >= 2, got " +
                          detail::describe(s0));
  }
  return std::log(s0) / std::numbers::ln2;
}

namespace {

void require_within_stop(const ContractionModel& model, double t) {
  detail::require_nonnegative_time(t, "t");
  if (t > model.t_max()) {
    throw DomainError("t = " + detail::describe(t) + " is past t_max = " +
                      detail::describe(model.t_max()) +
                      "; p(x0|s_n) <= 1 would be violated");
  }
}

}  // namespace

double contraction_probability(const ContractionModel& model, double t) {
  require_within_stop(model, t);
  // Rounding at t = t_max can land a hair above one.
  return std::min(1.0, std::exp(t * std::numbers::ln2) / model.s0());
}

double contraction_entropy(double t) {
  detail::require_nonnegative_time(t, "t");
  return -t * std::numbers::ln2;
}

double contraction_entropy(const ContractionModel& model, double t) {
  require_within_stop(model, t);
  return contraction_entropy(t);
}

double contraction_sample_space_size(const ContractionModel& model, double t) {
  require_within_stop(model, t);
  return std::max(1.0, model.s0() / std::exp(t * std::numbers::ln2));
}

}  // namespace expentropy
