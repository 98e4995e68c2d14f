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

/// Sample space of initial size s0 halving once per unit of scaled time.
/// The process stops when the reference partition holds probability 1,
/// i.e. at t_max = ln(s0) / ln(2).
class ContractionModel {
 public:
  /// Throws ValidationError unless s0 >= 2.
  explicit ContractionModel(double s0);

  double s0() const noexcept { return s0_; }
  double t_max() const noexcept { return t_max_; }

  bool operator==(const ContractionModel&) const = default;

 private:
  double s0_;
  double t_max_;
};

double contraction_t_max(double s0);

/// 2^t / s0 on [0, t_max]; DomainError outside, since p <= 1 must hold.
double contraction_probability(const ContractionModel& model, double t);

/// -t ln 2. Negative: this is the entropy change relative to the t = 0
/// reference space.
double contraction_entropy(double t);

/// As above, but rejects t past the model's stopping time.
double contraction_entropy(const ContractionModel& model, double t);

/// s0 / 2^t on [0, t_max].
double contraction_sample_space_size(const ContractionModel& model, double t);

}  // namespace expentropy
