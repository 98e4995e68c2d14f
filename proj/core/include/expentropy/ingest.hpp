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

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>

#include "expentropy/fitting.hpp"
#include "expentropy/mono.hpp"
#include "expentropy/multiexp.hpp"
#include "expentropy/processes.hpp"

namespace expentropy {

/// Where to read a series and how to turn its time column into offsets.
struct SeriesFileSpec {
  std::filesystem::path path;
  std::string time_column;
  std::string value_column;
  /// Empty: the earliest row is t = 0. Otherwise t = time - origin.
  std::optional<double> origin;

  /// Throws ValidationError if a column name is empty or both are equal.
  void validate() const;
};

/// Reads a header-bearing CSV. Rows may come in any order; they are sorted
/// by time. Every failure is an IngestError naming the file and row.
TimeSeries load_series(const SeriesFileSpec& spec);

/// Same as load_series but from an open stream; `source` names it in errors.
TimeSeries parse_series(std::istream& in, const SeriesFileSpec& spec,
                        const std::string& source);

using ModelConfig = std::variant<MonoExpModel, ProcessSet, MultiExpModel>;

/// Reads a `key = value` model file (keys s0, lambda, process, component).
ModelConfig load_model(const std::filesystem::path& path);
ModelConfig parse_model(std::istream& in, const std::string& source);

/// Writes a model in the format load_model reads, with round-trip precision.
std::string serialize_model(const ModelConfig& config);

/// Parses a complete decimal or scientific-notation number. Rejects empty
/// text, trailing garbage, thousands separators and non-finite values.
std::optional<double> parse_number(std::string_view text);

}  // namespace expentropy
