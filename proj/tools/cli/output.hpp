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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace expentropy::cli {

/// Evenly spaced sample points from `start` to `end` inclusive.
struct Grid {
  double start = 0.0;
  double end = 1.0;
  double step = 0.005;

  /// Throws ValidationError unless start < end and step > 0.
  void validate() const;
  std::vector<double> points() const;

  /// `count` points (>= 2) spanning [start, end].
  static Grid with_points(double start, double end, int count);
};

/// Parses "start:end:step". Throws ValidationError on malformed text.
Grid parse_grid(std::string_view text);

/// A column-oriented table: the first column is the abscissa.
struct Table {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::vector<double> column(std::size_t index) const;
};

enum class Style { kData, kSvg };

std::optional<Style> parse_style(std::string_view text);

/// Tab-separated, header row, `\n` endings, 9 significant digits.
void write_tsv(std::ostream& out, const Table& table);

/// Self-contained SVG 1.1 line chart with one polyline per non-x column.
void write_svg(std::ostream& out, const Table& table);

void write_table(std::ostream& out, const Table& table, Style style);

/// 9-significant-digit data formatting ("inf", "nan" for non-finite).
std::string format_data(double v);

}  // namespace expentropy::cli
