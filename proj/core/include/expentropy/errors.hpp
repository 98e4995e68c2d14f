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

#include <stdexcept>
#include <string>

namespace expentropy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the function (negative time,
/// time past a stopping condition, non-finite input).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A model or data set violates one of its structural invariants.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to converge within its budget.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds a hard enumeration or memory bound.
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// Failure to read or parse an input file. The message always carries the
/// file name and, where applicable, the row or key that failed.
class IngestError : public Error {
 public:
  IngestError(std::string file, std::string location, const std::string& rule)
      : Error(file + (location.empty() ? "" : ":" + location) + ": " + rule),
        file_(std::move(file)),
        location_(std::move(location)) {}

  const std::string& file() const noexcept { return file_; }
  const std::string& location() const noexcept { return location_; }

 private:
  std::string file_;
  std::string location_;
};

}  // namespace expentropy
