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

namespace expentropy {

/// Sample space of initial size s0 expanding as s0 * exp(lambda * t).
class MonoExpModel {
 public:
  /// Throws ValidationError unless s0 >= 1 and lambda > 0 (both finite).
  MonoExpModel(double s0, double lambda);

  double s0() const noexcept { return s0_; }
  double lambda() const noexcept { return lambda_; }

  /// Scaled time T = lambda * t.
  double scaled_time(double t) const;

  bool operator==(const MonoExpModel&) const = default;

 private:
  double s0_;
  double lambda_;
};

/// p(x0 | T) = exp(-T) for scaled time T >= 0.
double probability_mono(double scaled_time);

/// H(T) = T nats. Returned exactly; equals -ln(probability_mono(T)).
double entropy_mono(double scaled_time);

/// s(t) = s0 * exp(lambda * t).
double sample_space_size(const MonoExpModel& model, double t);

}  // namespace expentropy
