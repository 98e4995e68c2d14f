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

#include <cmath>
#include <sstream>
#include <string>

#include "expentropy/errors.hpp"

namespace expentropy::detail {

inline std::string describe(double value) {
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

inline void require_nonnegative_time(double t, const char* name) {
  if (!std::isfinite(t)) {
    throw DomainError(std::string(name) + " must be finite, got " +
                      describe(t));
  }
  if (t < 0.0) {
    throw DomainError(std::string(name) + " must be >= 0, got " + describe(t));
  }
}

}  // namespace expentropy::detail
