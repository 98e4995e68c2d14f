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

#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <ostream>

#include "expentropy/contraction.hpp"
#include "expentropy/errors.hpp"
#include "expentropy/fitting.hpp"
#include "expentropy/ingest.hpp"
#include "expentropy/mono.hpp"
#include "expentropy/multiexp.hpp"
#include "expentropy/oracle.hpp"
#include "figures.hpp"
#include "output.hpp"

namespace expentropy::cli {

namespace {

struct Options {
  std::string out_path;
  std::string grid_text;
  std::string style_text = "data";
  bool verify = false;
  std::optional<double> tmax;

  std::string input_path;
  std::string time_column;
  std::string value_column;
  std::optional<double> origin;
  bool emit = false;

  double rtol = 1e-8;
  double truncation = 1e-10;

  int n = 0;
  double s0 = 0.0;

  std::string figure_id;
  std::string model_path;
  std::optional<double> fig_s0;
  std::optional<double> fig_lambda;
};

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

void report(std::ostream& os, const std::string& key, const std::string& value) {
  os << key << '\t' << value << '\n';
}

// Writes to the --out file when given, otherwise to `fallback`.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error("cannot open output file '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  bool to_file() const { return file_.is_open(); }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Style style_of(const Options& opt) {
  const auto style = parse_style(opt.style_text);
  if (!style) {
    throw ValidationError("--style must be 'data' or 'svg', got '" +
                          opt.style_text + "'");
  }
  return *style;
}

std::optional<Grid> grid_of(const Options& opt) {
  if (opt.grid_text.empty()) return std::nullopt;
  return parse_grid(opt.grid_text);
}

std::vector<std::string> read_header(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::string line;
  while (in && std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::size_t from = 0;
    while (true) {
      const auto pos = line.find(',', from);
      auto cell = line.substr(from, pos - from);
      const auto b = cell.find_first_not_of(" \t\r");
      const auto e = cell.find_last_not_of(" \t\r");
      cells.push_back(b == std::string::npos ? "" : cell.substr(b, e - b + 1));
      if (pos == std::string::npos) break;
      from = pos + 1;
    }
    return cells;
  }
  return {};
}

int cmd_fit(const Options& opt, std::ostream& out) {
  SeriesFileSpec spec{opt.input_path, opt.time_column, opt.value_column, opt.origin};
  if (spec.time_column.empty() || spec.value_column.empty()) {
    const auto header = read_header(opt.input_path);
    if (spec.time_column.empty() && !header.empty()) spec.time_column = header[0];
    if (spec.value_column.empty() && header.size() > 1) spec.value_column = header[1];
    if (spec.time_column.empty()) spec.time_column = "time";
    if (spec.value_column.empty()) spec.value_column = "value";
  }
  const auto series = load_series(spec);
  const auto fit = fit_mono_exponential(series);

  const Style style = style_of(opt);
  if (opt.emit && style == Style::kSvg && opt.out_path.empty()) {
    throw ValidationError("--style svg with --emit needs --out");
  }

  report(out, "origin", series.origin_label);
  report(out, "points", std::to_string(series.points.size()));
  report(out, "s0", fixed6(fit.s0_hat));
  report(out, "lambda", fixed6(fit.lambda_hat));
  char growth[32];
  std::snprintf(growth, sizeof growth, "%.2f%%", 100.0 * annual_growth_rate(fit.lambda_hat));
  report(out, "annual_growth", growth);
  report(out, "r_squared_log", fixed6(fit.r_squared));
  report(out, "r_squared_raw", fixed6(fit.r_squared_raw));

  if (!opt.emit) return 0;
  std::vector<double> times;
  if (const auto grid = grid_of(opt)) {
    times = grid->points();
  } else {
    for (const auto& p : series.points) times.push_back(p.t);
  }
  const auto probs = probability_series(fit, times);
  const auto entropies = entropy_series(fit, times);
  Table table{"Fitted probability and entropy", "t", "value", {"t", "p", "H"}, {}};
  for (std::size_t i = 0; i < times.size(); ++i) {
    table.rows.push_back({times[i], probs[i].value, entropies[i].value});
  }
  Sink sink(opt.out_path, out);
  if (!sink.to_file()) out << '\n';
  write_table(sink.get(), table, style);
  return 0;
}

int cmd_model(const Options& opt, std::ostream& out) {
  const auto config = load_model(opt.input_path);
  if (opt.tmax && !std::holds_alternative<MultiExpModel>(config)) {
    throw ValidationError("--tmax applies to multi-exponential models only");
  }
  const auto style = style_of(opt);
  const auto grid = grid_of(opt).value_or(default_model_grid(config, opt.tmax));
  const auto table = model_table(config, grid, opt.tmax);
  Sink sink(opt.out_path, out);
  write_table(sink.get(), table, style);
  return 0;
}

int cmd_mrt(const Options& opt, std::ostream& out, std::ostream& err) {
  const auto config = load_model(opt.input_path);
  const auto* model = std::get_if<MultiExpModel>(&config);
  if (!model) throw ValidationError("MRT requires components");

  Sink sink(opt.out_path, out);
  auto& os = sink.get();
  const double closed = mrt_closed_form(*model);
  report(os, "mrt_closed_form", fixed6(closed));
  if (!opt.verify) return 0;

  const oracle::QuadratureSpec spec{opt.rtol, opt.truncation};
  const auto quad = oracle::mrt_quadrature(*model, spec);
  const double rel = std::abs(quad.mrt - closed) / std::abs(closed);
  const double allowed = std::max(opt.rtol, 1e-3);
  report(os, "mrt_quadrature", fixed6(quad.mrt));
  report(os, "relative_difference", sci(rel));
  report(os, "cutoff", fixed6(quad.cutoff));
  report(os, "subintervals", std::to_string(quad.subintervals));
  if (rel > allowed) {
    err << "error: quadrature and closed form differ by " << sci(rel)
        << " (allowed " << sci(allowed) << ")\n";
    return 1;
  }
  return 0;
}

int cmd_simulate(const Options& opt, std::ostream& out) {
  const auto sim = oracle::simulate_doubling(opt.n);
  const double scaled = static_cast<double>(opt.n) * std::numbers::ln2;
  const double p = probability_mono(scaled);
  const double h = entropy_mono(scaled);
  Sink sink(opt.out_path, out);
  auto& os = sink.get();
  report(os, "n", std::to_string(opt.n));
  report(os, "partitions", std::to_string(sim.state.partition_count));
  report(os, "p_enumerated", fixed6(sim.state.cumulative_probability));
  report(os, "p_closed_form", fixed6(p));
  report(os, "p_abs_diff", sci(std::abs(sim.state.cumulative_probability - p)));
  report(os, "H_enumerated", fixed6(sim.entropy));
  report(os, "H_closed_form", fixed6(h));
  report(os, "H_abs_diff", sci(std::abs(sim.entropy - h)));
  return 0;
}

int cmd_contract(const Options& opt, std::ostream& out) {
  const ContractionModel model(opt.s0);
  const Style style = style_of(opt);
  if (style == Style::kSvg && opt.out_path.empty()) {
    throw ValidationError("--style svg needs --out");
  }
  report(out, "s0", fixed6(model.s0()));
  report(out, "t_max", fixed6(model.t_max()));

  std::vector<double> times;
  if (const auto grid = grid_of(opt)) {
    times = grid->points();
  } else {
    for (double t = 0.0; t < model.t_max(); t += 1.0) times.push_back(t);
    times.push_back(model.t_max());
  }
  Table table{"Contraction trajectory", "t", "value", {"t", "size", "p", "H"}, {}};
  for (double t : times) {
    table.rows.push_back({t, contraction_sample_space_size(model, t),
                          contraction_probability(model, t),
                          contraction_entropy(model, t)});
  }
  report(out, "p_final", fixed6(table.rows.back()[2]));
  Sink sink(opt.out_path, out);
  if (!sink.to_file()) out << '\n';
  write_table(sink.get(), table, style);
  return 0;
}

int cmd_figures(const Options& opt, std::ostream& out) {
  FigureRequest request;
  request.figure_id = opt.figure_id;
  request.grid = grid_of(opt);
  request.tmax = opt.tmax;
  request.s0 = opt.fig_s0;
  request.lambda = opt.fig_lambda;
  if (!opt.model_path.empty()) request.model = load_model(opt.model_path);
  const auto style = style_of(opt);
  const auto table = build_figure(request);
  Sink sink(opt.out_path, out);
  write_table(sink.get(), table, style);
  return 0;
}

void add_output_options(CLI::App* cmd, Options& opt, bool grid, bool style) {
  cmd->add_option("--out", opt.out_path, "Write output to this file instead of stdout");
  if (grid) cmd->add_option("--grid", opt.grid_text, "Sample grid as start:end:step");
  if (style) cmd->add_option("--style", opt.style_text, "Output style: data (TSV) or svg");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Probability and information entropy of exponentially expanding or "
      "contracting sample spaces",
      "expentropy"};
  app.require_subcommand(1);
  Options opt;

  auto* fit = app.add_subcommand("fit", "Fit s0 * exp(lambda t) to a CSV time series");
  fit->add_option("series", opt.input_path, "CSV file with a header row")->required();
  fit->add_option("--time-column", opt.time_column, "Time column (default: first)");
  fit->add_option("--value-column", opt.value_column, "Value column (default: second)");
  fit->add_option("--origin", opt.origin, "Time value taken as t = 0 (default: earliest row)");
  fit->add_flag("--emit", opt.emit, "Also emit p(t) and H(t) over the observation window");
  add_output_options(fit, opt, true, true);

  auto* model = app.add_subcommand("model", "Evaluate a model file over a grid");
  model->add_option("model", opt.input_path, "Model file")->required();
  model->add_option("--tmax", opt.tmax, "T_max for normalized entropy");
  add_output_options(model, opt, true, true);

  auto* mrt = app.add_subcommand("mrt", "Mean residence time of a multi-exponential model");
  mrt->add_option("model", opt.input_path, "Model file with components")->required();
  mrt->add_flag("--verify", opt.verify, "Cross-check against adaptive quadrature");
  mrt->add_option("--rtol", opt.rtol, "Quadrature relative tolerance");
  mrt->add_option("--truncation", opt.truncation, "Quadrature tail truncation threshold");
  add_output_options(mrt, opt, false, false);

  auto* simulate = app.add_subcommand("simulate", "Enumerate n doublings of the sample space");
  simulate->add_option("n", opt.n, "Number of doublings (0..20)")->required();
  add_output_options(simulate, opt, false, false);

  auto* contract = app.add_subcommand("contract", "Halve a sample space of size s0 until p = 1");
  contract->add_option("s0", opt.s0, "Initial sample-space size (>= 2)")->required();
  add_output_options(contract, opt, true, true);

  auto* figures = app.add_subcommand("figures", "Emit the data behind a figure");
  figures->add_option("figure", opt.figure_id, "Figure id: 1..14, A1, A2, A3")->required();
  figures->add_option("--tmax", opt.tmax, "T_max for figure 12 (default 1000)");
  figures->add_option("--model", opt.model_path, "Model file overriding the default parameters");
  figures->add_option("--s0", opt.fig_s0, "s0 for figures 13, 14, A1-A3");
  figures->add_option("--lambda", opt.fig_lambda, "lambda for figures 13, 14");
  add_output_options(figures, opt, true, true);

  std::vector<const char*> argv{"expentropy"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (fit->parsed()) return cmd_fit(opt, out);
    if (model->parsed()) return cmd_model(opt, out);
    if (mrt->parsed()) return cmd_mrt(opt, out, err);
    if (simulate->parsed()) return cmd_simulate(opt, out);
    if (contract->parsed()) return cmd_contract(opt, out);
    if (figures->parsed()) return cmd_figures(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace expentropy::cli
