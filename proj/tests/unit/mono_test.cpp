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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "expentropy/errors.hpp"

namespace expentropy {
namespace {

constexpr double kLn2 = std::numbers::ln2;

TEST(ProbabilityMono, ReferenceValues) {
  EXPECT_EQ(probability_mono(0.0), 1.0);
  EXPECT_NEAR(probability_mono(2.0 * kLn2), 0.25, 1e-15);
  EXPECT_NEAR(probability_mono(1.0), 0.36787944117144233, 1e-16);
}

TEST(ProbabilityMono, OnlyZeroGivesOne) {
  EXPECT_LT(probability_mono(1e-12), 1.0);
  EXPECT_GT(probability_mono(700.0), 0.0);
}

TEST(ProbabilityMono, RejectsBadTime) {
  EXPECT_THROW(probability_mono(-1e-9), DomainError);
  EXPECT_THROW(probability_mono(std::numeric_limits<double>::quiet_NaN()), DomainError);
  EXPECT_THROW(probability_mono(std::numeric_limits<double>::infinity()), DomainError);
}

TEST(EntropyMono, ReferenceValues) {
  EXPECT_EQ(entropy_mono(0.0), 0.0);
  EXPECT_NEAR(entropy_mono(2.0 * kLn2), 1.3862943611198906, 1e-15);
  // lambda * t at the end of the 2001-2019 window.
  EXPECT_EQ(entropy_mono(0.999), 0.999);
  EXPECT_THROW(entropy_mono(-0.5), DomainError);
}

TEST(EntropyMono, IsMinusLogProbability) {
  for (double t = 0.0; t <= 100.0; t += 0.25) {
    EXPECT_NEAR(entropy_mono(t), -std::log(probability_mono(t)), 1e-12) << t;
  }
}

TEST(SampleSpaceSize, ReferenceValues) {
  EXPECT_EQ(sample_space_size(MonoExpModel(1.0, 1.0), 0.0), 1.0);
  EXPECT_EQ(sample_space_size(MonoExpModel(7.5805, 0.0555), 0.0), 7.5805);
  EXPECT_NEAR(sample_space_size(MonoExpModel(1.0, kLn2), 3.0), 8.0, 1e-12);
}

TEST(SampleSpaceSize, MatchesInverseProbability) {
  const MonoExpModel model(3.0, 0.2);
  for (double t : {0.0, 1.0, 7.5, 40.0}) {
    EXPECT_NEAR(sample_space_size(model, t),
                model.s0() / probability_mono(model.scaled_time(t)),
                1e-12 * sample_space_size(model, t));
  }
  EXPECT_THROW(sample_space_size(model, -1.0), DomainError);
}

TEST(MonoExpModel, Invariants) {
  EXPECT_THROW(MonoExpModel(0.5, 1.0), ValidationError);
  EXPECT_THROW(MonoExpModel(1.0, 0.0), ValidationError);
  EXPECT_THROW(MonoExpModel(1.0, -0.1), ValidationError);
  EXPECT_THROW(MonoExpModel(std::nan(""), 1.0), ValidationError);
  EXPECT_NO_THROW(MonoExpModel(1.0, 1e-9));
}

}  // namespace
}  // namespace expentropy
