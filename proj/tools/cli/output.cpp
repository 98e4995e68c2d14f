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

#include "output.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include "expentropy/errors.hpp"
#include "expentropy/ingest.hpp"

namespace expentropy::cli {

void Grid::validate() const {
  if (!std::isfinite(start) || !std::isfinite(end) || !(start < end)) {
    throw ValidationError("grid needs start < end");
  }
  if (!std::isfinite(step) || step <= 0.0) {
    throw ValidationError("grid step must be > 0");
  }
}

std::vector<double> Grid::points() const {
  validate();
  const double span = (end - start) / step;
  if (span > 1e7) throw ValidationError("grid has more than 1e7 points");
  // Tolerate rounding in (end - start) / step so the endpoint is kept.
  const auto intervals = static_cast<long>(std::floor(span + 1e-9));
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(intervals) + 2);
  for (long i = 0; i <= intervals; ++i) {
    out.push_back(start + static_cast<double>(i) * step);
  }
  if (std::abs(out.back() - end) <= 1e-9 * step) {
    out.back() = end;
  }
  return out;
}

Grid Grid::with_points(double start, double end, int count) {
  return {start, end, (end - start) / static_cast<double>(count - 1)};
}

Grid parse_grid(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t from = 0;
  while (true) {
    const auto pos = text.find(':', from);
    parts.push_back(text.substr(from, pos - from));
    if (pos == std::string_view::npos) break;
    from = pos + 1;
  }
  if (parts.size() != 3) {
    throw ValidationError("grid must be start:end:step, got '" +
                          std::string(text) + "'");
  }
  double values[3];
  for (int i = 0; i < 3; ++i) {
    const auto v = parse_number(parts[i]);
    if (!v) {
      throw ValidationError("grid must be start:end:step, got '" +
                            std::string(text) + "'");
    }
    values[i] = *v;
  }
  Grid grid{values[0], values[1], values[2]};
  grid.validate();
  return grid;
}

std::vector<double> Table::column(std::size_t index) const {
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(index));
  return out;
}

std::optional<Style> parse_style(std::string_view text) {
  if (text == "data") return Style::kData;
  if (text == "svg") return Style::kSvg;
  return std::nullopt;
}

std::string format_data(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

void write_tsv(std::ostream& out, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    out << (i ? "\t" : "") << table.columns[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out << (i ? "\t" : "") << format_data(row[i]);
    }
    out << '\n';
  }
}

namespace {

std::string escape_xml(std::string_view s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                    "#9467bd", "#8c564b", "#e377c2", "#17becf"};

}  // namespace

void write_svg(std::ostream& out, const Table& table) {
  constexpr double kWidth = 720, kHeight = 440;
  constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const auto& row : table.rows) {
    if (!std::isfinite(row[0])) continue;
    xmin = std::min(xmin, row[0]);
    xmax = std::max(xmax, row[0]);
    for (std::size_t i = 1; i < row.size(); ++i) {
      if (!std::isfinite(row[i])) continue;
      ymin = std::min(ymin, row[i]);
      ymax = std::max(ymax, row[i]);
    }
  }
  if (!std::isfinite(xmin)) xmin = 0, xmax = 1;
  if (!std::isfinite(ymin)) ymin = 0, ymax = 1;
  if (xmax == xmin) xmax = xmin + 1;
  if (ymax == ymin) ymin -= 0.5, ymax += 0.5;

  const auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  const auto py = [&](double y) { return kTop + (ymax - y) / (ymax - ymin) * plot_h; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kWidth << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth
      << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">"
      << escape_xml(table.title) << "</text>\n";

  // Axes and ticks.
  out << "<g stroke=\"black\" fill=\"none\">\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop + plot_h)
      << "\" x2=\"" << coord(kLeft + plot_w) << "\" y2=\"" << coord(kTop + plot_h) << "\"/>\n"
      << "<line x1=\"" << coord(kLeft) << "\" y1=\"" << coord(kTop) << "\" x2=\""
      << coord(kLeft) << "\" y2=\"" << coord(kTop + plot_h) << "\"/>\n</g>\n";
  constexpr int kTicks = 5;
  out << "<g>\n";
  for (int i = 0; i <= kTicks; ++i) {
    const double fx = xmin + (xmax - xmin) * i / kTicks;
    const double fy = ymin + (ymax - ymin) * i / kTicks;
    out << "<line x1=\"" << coord(px(fx)) << "\" y1=\"" << coord(kTop + plot_h)
        << "\" x2=\"" << coord(px(fx)) << "\" y2=\"" << coord(kTop + plot_h + 5)
        << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << coord(px(fx)) << "\" y=\"" << coord(kTop + plot_h + 18)
        << "\" text-anchor=\"middle\">" << tick_label(fx) << "</text>\n"
        << "<line x1=\"" << coord(kLeft - 5) << "\" y1=\"" << coord(py(fy)) << "\" x2=\""
        << coord(kLeft) << "\" y2=\"" << coord(py(fy)) << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << coord(kLeft - 8) << "\" y=\"" << coord(py(fy) + 4)
        << "\" text-anchor=\"end\">" << tick_label(fy) << "</text>\n";
  }
  out << "</g>\n"
      << "<text x=\"" << coord(kLeft + plot_w / 2) << "\" y=\"" << coord(kHeight - 10)
      << "\" text-anchor=\"middle\">" << escape_xml(table.x_label) << "</text>\n"
      << "<text transform=\"translate(16," << coord(kTop + plot_h / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << escape_xml(table.y_label)
      << "</text>\n";

  for (std::size_t s = 1; s < table.columns.size(); ++s) {
    const char* color = kPalette[(s - 1) % std::size(kPalette)];
    out << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" points=\"";
    bool first = true;
    for (const auto& row : table.rows) {
      if (!std::isfinite(row[0]) || !std::isfinite(row[s])) continue;
      out << (first ? "" : " ") << coord(px(row[0])) << ',' << coord(py(row[s]));
      first = false;
    }
    out << "\"/>\n";
    const double ly = kTop + 10 + 18 * static_cast<double>(s - 1);
    out << "<line x1=\"" << coord(kLeft + plot_w + 15) << "\" y1=\"" << coord(ly)
        << "\" x2=\"" << coord(kLeft + plot_w + 40) << "\" y2=\"" << coord(ly)
        << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << coord(kLeft + plot_w + 46) << "\" y=\"" << coord(ly + 4)
        << "\">" << escape_xml(table.columns[s]) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_table(std::ostream& out, const Table& table, Style style) {
  if (style == Style::kSvg) {
    write_svg(out, table);
  } else {
    write_tsv(out, table);
  }
}

}  // namespace expentropy::cli
