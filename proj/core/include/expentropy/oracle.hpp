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

// Brute-force cross-checks for the closed forms: explicit enumeration of the
// doubling/halving constructions and numerical quadrature of the residence
// time integrals. Nothing in here calls into the closed-form code.

#include <cstddef>
#include <cstdint>
#include <functional>

#include "expentropy/multiexp.hpp"

namespace expentropy::oracle {

inline constexpr int kMaxDoublings = 20;

struct PartitionState {
  int n = 0;
  std::uint64_t partition_count = 1;
  double cumulative_probability = 1.0;
};

struct DoublingResult {
  PartitionState state;
  double entropy = 0.0;  // nats, explicit sum of -p ln p over all partitions
};

/// Builds the 2^n equal partitions by repeated splitting, then reads one
/// partition's probability and sums -p ln p over all of them.
/// DomainError for n < 0, ResourceError for n > kMaxDoublings.
DoublingResult simulate_doubling(int n);

/// Upper bound on s0 for explicit enumeration of the outcome interval.
inline constexpr std::uint64_t kMaxEnumeratedOutcomes = std::uint64_t{1} << 24;

/// Probability of x0 after halving [1, s0] n times. When 2^n divides s0 the
/// interval is enumerated explicitly; otherwise the continuous 2^n / s0 is
/// returned. DomainError when 2^n > s0.
double simulate_halving(std::uint64_t s0, int n);

struct QuadratureSpec {
  double relative_tolerance = 1e-8;
  double truncation_threshold = 1e-10;

  /// Throws ValidationError unless relative_tolerance is in (0, 1e-2] and
  /// truncation_threshold is in (0, 1e-6].
  void validate() const;
};

inline constexpr std::size_t kMaxSubintervals = 1'000'000;

struct SimpsonResult {
  double value = 0.0;
  std::size_t subintervals = 0;
};

/// Adaptive Simpson on [a, b] with interval bisection until the Richardson
/// error estimate falls below abs_tolerance. NumericalError once more than
/// max_subintervals intervals have been accepted or split.
SimpsonResult adaptive_simpson(const std::function<double(double)>& f,
                               double a, double b, double abs_tolerance,
                               std::size_t max_subintervals = kMaxSubintervals);

struct MrtQuadrature {
  double mrt = 0.0;
  double zeroth_moment = 0.0;  // integral of p over [0, inf)
  double first_moment = 0.0;   // integral of T p over [0, inf)
  double cutoff = 0.0;         // T_cut, beyond which tails are analytic
  std::size_t subintervals = 0;
};

/// Residence time by adaptive quadrature on [0, T_cut] plus analytic
/// per-component tails on [T_cut, inf).
MrtQuadrature mrt_quadrature(const MultiExpModel& model,
                             const QuadratureSpec& spec = {});

}  // namespace expentropy::oracle
