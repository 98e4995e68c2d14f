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

#include <gtest/gtest.h>

#include <cmath>

#include "expentropy/errors.hpp"
#include "support/generators.hpp"

namespace expentropy {
namespace {

constexpr double kTmax1000 = 9.9657842846620870436;
constexpr double kLn1000 = 6.9077552789821370521;

TEST(ContractionTmax, ReferenceValues) {
  EXPECT_NEAR(contraction_t_max(1000.0), kTmax1000, 1e-14);
  EXPECT_EQ(contraction_t_max(2.0), 1.0);
  EXPECT_NEAR(contraction_t_max(1024.0), 10.0, 1e-15);
  EXPECT_THROW(contraction_t_max(1.5), ValidationError);
  EXPECT_THROW(ContractionModel(1.0), ValidationError);
}

TEST(ContractionProbability, ReferenceValues) {
  const ContractionModel model(1000.0);
  EXPECT_NEAR(contraction_probability(model, 0.0), 0.001, 1e-18);
  EXPECT_NEAR(contraction_probability(model, model.t_max()), 1.0, 1e-12);
  EXPECT_EQ(contraction_probability(ContractionModel(2.0), 1.0), 1.0);
}

TEST(ContractionProbability, RejectsTimePastStop) {
  const ContractionModel model(1000.0);
  EXPECT_THROW(contraction_probability(model, model.t_max() + 1e-9), DomainError);
  EXPECT_THROW(contraction_probability(model, 10.0), DomainError);
  EXPECT_THROW(contraction_probability(model, -0.1), DomainError);
  EXPECT_THROW(contraction_entropy(model, 10.0), DomainError);
  EXPECT_THROW(contraction_sample_space_size(model, 10.0), DomainError);
}

TEST(ContractionEntropy, ReferenceValues) {
  EXPECT_EQ(contraction_entropy(0.0), 0.0);
  EXPECT_NEAR(contraction_entropy(1.0), -0.69314718055994531, 1e-16);
  EXPECT_NEAR(contraction_entropy(kTmax1000), -kLn1000, 1e-12);
  EXPECT_THROW(contraction_entropy(-1.0), DomainError);
}

TEST(ContractionSampleSpace, HalvesPerUnitTime) {
  const ContractionModel model(1024.0);
  EXPECT_EQ(contraction_sample_space_size(model, 0.0), 1024.0);
  EXPECT_NEAR(contraction_sample_space_size(model, 3.0), 128.0, 1e-12);
  EXPECT_NEAR(contraction_sample_space_size(model, 10.0), 1.0, 1e-12);
}

TEST(ContractionProperties, StoppingConditionForRandomSizes) {
  testing::Generator gen(0x5eed0008);
  for (int trial = 0; trial < 200; ++trial) {
    const ContractionModel model(gen.log_uniform(2.0, 1e12));
    EXPECT_NEAR(contraction_probability(model, model.t_max()), 1.0, 1e-9);
    EXPECT_NEAR(contraction_entropy(model.t_max()), -std::log(model.s0()), 1e-9);
    double prev = 0.0;
    for (int k = 0; k <= 50; ++k) {
      const double t = k == 50 ? model.t_max() : model.t_max() * k / 50.0;
      const double p = contraction_probability(model, t);
      EXPECT_GT(p, prev);
      EXPECT_LE(p, 1.0);
      prev = p;
    }
  }
}

}  // namespace
}  // namespace expentropy
