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

/// Rate constants of simultaneous, independent expansion processes.
class ProcessSet {
 public:
  /// Throws ValidationError if empty or if any rate is not finite and > 0.
  explicit ProcessSet(std::vector<double> rates);

  std::span<const double> rates() const noexcept { return rates_; }
  std::size_t size() const noexcept { return rates_.size(); }

  bool operator==(const ProcessSet&) const = default;

 private:
  std::vector<double> rates_;
};

struct ProcessContribution {
  double probability;
  double entropy;
};

/// Combined rate constant: the sum of the individual rates.
double combine_processes(const ProcessSet& procs);

/// Per-process (exp(-rate * t), rate * t). The product of the probabilities
/// is the combined probability and the entropies add up to the combined one.
std::vector<ProcessContribution> decompose_processes(const ProcessSet& procs,
                                                     double t);

}  // namespace expentropy
