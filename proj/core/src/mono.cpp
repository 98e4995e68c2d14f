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

#include "expentropy/mono.hpp"

#include <cmath>

#include "checks.hpp"

namespace expentropy {

MonoExpModel::MonoExpModel(double s0, double lambda) : s0_(s0), lambda_(lambda) {
  if (!std::isfinite(s0) || s0 < 1.0) {
    throw ValidationError("s0 must be >= 1, got " + detail::describe(s0));
  }
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ValidationError("lambda must be > 0, got " + detail::describe(lambda));
  }
}

double MonoExpModel::scaled_time(double t) const {
  detail::require_nonnegative_time(t, "t");
  return lambda_ * t;
}

double probability_mono(double scaled_time) {
  detail::require_nonnegative_time(scaled_time, "T");
  return std::exp(-scaled_time);
}

double entropy_mono(double scaled_time) {
  detail::require_nonnegative_time(scaled_time, "T");
  return scaled_time;
}

double sample_space_size(const MonoExpModel& model, double t) {
  return model.s0() * std::exp(model.scaled_time(t));
}

}  // namespace expentropy
