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

#include "expentropy/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>
#include <vector>

#include "checks.hpp"

namespace expentropy {

namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string row_label(std::size_t line_no) {
  return "row " + std::to_string(line_no);
}

}  // namespace

std::optional<double> parse_number(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(value)) return std::nullopt;
  return value;
}

void SeriesFileSpec::validate() const {
  if (time_column.empty() || value_column.empty()) {
    throw ValidationError("column names must be nonempty");
  }
  if (time_column == value_column) {
    throw ValidationError("time and value columns must differ, both are '" +
                          time_column + "'");
  }
}

TimeSeries load_series(const SeriesFileSpec& spec) {
  std::ifstream in(spec.path, std::ios::binary);
  if (!in) {
    throw IngestError(spec.path.string(), "", "cannot open file");
  }
  return parse_series(in, spec, spec.path.string());
}

TimeSeries parse_series(std::istream& in, const SeriesFileSpec& spec,
                        const std::string& source) {
  spec.validate();

  struct Row {
    double time;
    double value;
    std::string time_text;
    std::size_t line_no;
  };

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string> header;
  while (header.empty() && std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    for (auto cell : split(line, ',')) header.emplace_back(cell);
  }
  if (header.empty()) throw IngestError(source, "", "file has no header row");

  const auto column = [&](const std::string& name) {
    const auto it = std::find(header.begin(), header.end(), name);
    if (it == header.end()) {
      throw IngestError(source, "header", "missing column '" + name + "'");
    }
    return static_cast<std::size_t>(it - header.begin());
  };
  const auto time_idx = column(spec.time_column);
  const auto value_idx = column(spec.value_column);

  std::vector<Row> rows;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) {
      throw IngestError(source, row_label(line_no),
                        "expected " + std::to_string(header.size()) +
                            " fields, got " + std::to_string(cells.size()) +
                            " (quoted fields and thousands separators are not "
                            "supported)");
    }
    const auto time = parse_number(cells[time_idx]);
    if (!time) {
      throw IngestError(source, row_label(line_no),
                        "unparsable number '" + std::string(cells[time_idx]) +
                            "' in column '" + spec.time_column + "'");
    }
    const auto value = parse_number(cells[value_idx]);
    if (!value) {
      throw IngestError(source, row_label(line_no),
                        "unparsable number '" + std::string(cells[value_idx]) +
                            "' in column '" + spec.value_column + "'");
    }
    if (*value <= 0.0) {
      throw IngestError(source, row_label(line_no),
                        "nonpositive value " + std::string(cells[value_idx]) +
                            " in column '" + spec.value_column + "'");
    }
    rows.push_back({*time, *value, std::string(cells[time_idx]), line_no});
  }

  if (rows.size() < 2) {
    throw IngestError(source, "", "need at least 2 points, got " +
                                      std::to_string(rows.size()));
  }

  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.time < b.time; });
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].time == rows[i - 1].time) {
      const auto [lo, hi] = std::minmax(rows[i].line_no, rows[i - 1].line_no);
      throw IngestError(source, row_label(hi),
                        "duplicate time " + rows[i].time_text + " (also at " +
                            row_label(lo) + ")");
    }
  }

  TimeSeries series;
  double origin = rows.front().time;
  series.origin_label = rows.front().time_text;
  if (spec.origin) {
    origin = *spec.origin;
    series.origin_label = format_number(origin);
  }
  series.points.reserve(rows.size());
  for (const auto& row : rows) {
    series.points.push_back({row.time - origin, row.value});
  }
  return series;
}

ModelConfig load_model(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IngestError(path.string(), "", "cannot open file");
  return parse_model(in, path.string());
}

ModelConfig parse_model(std::istream& in, const std::string& source) {
  std::optional<double> s0;
  std::optional<double> lambda;
  std::vector<double> processes;
  std::vector<ExpComponent> components;

  const auto number = [&](std::string_view text, const std::string& where,
                          const std::string& key) {
    const auto v = parse_number(text);
    if (!v) {
      throw IngestError(source, where,
                        "unparsable number '" + std::string(text) + "' for key '" +
                            key + "'");
    }
    return *v;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = line;
    if (const auto hash = body.find('#'); hash != std::string_view::npos) {
      body = body.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;

    const auto where = "line " + std::to_string(line_no);
    const auto eq = body.find('=');
    if (eq == std::string_view::npos) {
      throw IngestError(source, where, "expected 'key = value'");
    }
    const std::string key(trim(body.substr(0, eq)));
    const auto value = trim(body.substr(eq + 1));

    if (key == "s0" || key == "lambda") {
      auto& slot = key == "s0" ? s0 : lambda;
      if (slot) throw IngestError(source, where, "key '" + key + "' given twice");
      slot = number(value, where, key);
    } else if (key == "process") {
      processes.push_back(number(value, where, key));
    } else if (key == "component") {
      const auto parts = split(value, ',');
      if (parts.size() != 2) {
        throw IngestError(source, where,
                          "component must be 'A, c', got '" + std::string(value) +
                              "'");
      }
      components.push_back({number(parts[0], where, "component A"),
                            number(parts[1], where, "component c")});
    } else {
      throw IngestError(source, where, "unknown key '" + key + "'");
    }
  }

  const int variants = (s0 || lambda ? 1 : 0) + (processes.empty() ? 0 : 1) +
                       (components.empty() ? 0 : 1);
  if (variants == 0) {
    throw IngestError(source, "",
                      "no model keys; expected s0/lambda, process or component");
  }
  if (variants > 1) {
    throw IngestError(source, "",
                      "exactly one of s0/lambda, process or component may "
                      "appear");
  }

  try {
    if (s0 || lambda) {
      if (!s0) throw IngestError(source, "lambda", "mono model needs s0 as well");
      if (!lambda) throw IngestError(source, "s0", "mono model needs lambda as well");
      return MonoExpModel(*s0, *lambda);
    }
    if (!processes.empty()) return ProcessSet(std::move(processes));
    return MultiExpModel(std::move(components));
  } catch (const ValidationError& e) {
    const char* field = s0 || lambda ? "s0/lambda"
                        : processes.empty() ? "component"
                                            : "process";
    throw IngestError(source, field, e.what());
  }
}

std::string serialize_model(const ModelConfig& config) {
  std::ostringstream os;
  std::visit(
      [&os](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, MonoExpModel>) {
          os << "s0 = " << format_number(model.s0()) << '\n'
             << "lambda = " << format_number(model.lambda()) << '\n';
        } else if constexpr (std::is_same_v<T, ProcessSet>) {
          for (double r : model.rates()) os << "process = " << format_number(r) << '\n';
        } else {
          for (const auto& [a, c] : model.components()) {
            os << "component = " << format_number(a) << ", " << format_number(c)
               << '\n';
          }
        }
      },
      config);
  return os.str();
}

}  // namespace expentropy
