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

#include "expentropy/processes.hpp"

#include <cmath>
#include <numeric>

#include "checks.hpp"

namespace expentropy {

ProcessSet::ProcessSet(std::vector<double> rates) : rates_(std::move(rates)) {
  if (rates_.empty()) {
    throw ValidationError("process set needs at least one rate");
  }
  for (std::size_t i = 0; i < rates_.size(); ++i) {
    if (!std::isfinite(rates_[i]) || rates_[i] <= 0.0) {
      throw ValidationError("process " + std::to_string(i + 1) +
                            ": rate must be > 0, got " +
                            detail::describe(rates_[i]));
    }
  }
}

double combine_processes(const ProcessSet& procs) {
  const auto rates = procs.rates();
  return std::accumulate(rates.begin(), rates.end(), 0.0);
}

std::vector<ProcessContribution> decompose_processes(const ProcessSet& procs,
                                                     double t) {
  detail::require_nonnegative_time(t, "t");
  std::vector<ProcessContribution> out;
  out.reserve(procs.size());
  for (double rate : procs.rates()) {
    const double scaled = rate * t;
    out.push_back({std::exp(-scaled), scaled});
  }
  return out;
}

}  // namespace expentropy
