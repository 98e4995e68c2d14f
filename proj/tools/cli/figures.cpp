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

#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "expentropy/contraction.hpp"
#include "expentropy/errors.hpp"
#include "expentropy/mono.hpp"
#include "expentropy/multiexp.hpp"
#include "expentropy/processes.hpp"

namespace expentropy::cli {

MultiExpModel four_component_model() {
  return MultiExpModel({{0.4, 1.0}, {0.3, 0.1}, {0.2, 0.01}, {0.1, 0.001}});
}

ProcessSet three_process_set() { return ProcessSet({0.1, 0.3, 0.6}); }

MonoExpModel broad_money_model() { return MonoExpModel(7.5805, 0.0555); }

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids = {
      "1", "2", "3", "4", "5", "6", "7", "8", "9", "10",
      "11", "12", "13", "14", "A1", "A2", "A3"};
  return ids;
}

namespace {

std::string joined_ids() {
  std::string out;
  for (const auto& id : figure_ids()) out += (out.empty() ? "" : ", ") + id;
  return out;
}

template <typename Model>
Model model_or(const FigureRequest& request, Model fallback, const char* kind) {
  if (!request.model) return fallback;
  if (const auto* m = std::get_if<Model>(&*request.model)) return *m;
  throw ValidationError("figure " + request.figure_id + " needs a " + kind +
                        " model");
}

std::string indexed(const char* prefix, std::size_t i) {
  return prefix + std::to_string(i + 1);
}

}  // namespace

Grid default_model_grid(const ModelConfig& config, std::optional<double> tmax) {
  return std::visit(
      [tmax](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        double end = 0.0;
        if constexpr (std::is_same_v<T, MonoExpModel>) {
          end = 10.0 / model.lambda();
        } else if constexpr (std::is_same_v<T, ProcessSet>) {
          end = 10.0 / combine_processes(model);
        } else {
          end = tmax ? *tmax : 10.0 / model.slowest().rate;
        }
        return Grid::with_points(0.0, end, kDefaultGridPoints);
      },
      config);
}

Table model_table(const ModelConfig& config, const Grid& grid,
                  std::optional<double> tmax) {
  const auto points = grid.points();
  Table table;
  table.y_label = "value";
  std::visit(
      [&](const auto& model) {
        using T = std::decay_t<decltype(model)>;
        if constexpr (std::is_same_v<T, MonoExpModel>) {
          table.title = "Mono-exponential model";
          table.x_label = "t";
          table.columns = {"t", "T", "size", "p", "H"};
          for (double t : points) {
            const double scaled = model.scaled_time(t);
            table.rows.push_back({t, scaled, sample_space_size(model, t),
                                  probability_mono(scaled), entropy_mono(scaled)});
          }
        } else if constexpr (std::is_same_v<T, ProcessSet>) {
          table.title = "Simultaneous independent processes";
          table.x_label = "t";
          table.columns = {"t", "T", "p", "H"};
          for (std::size_t i = 0; i < model.size(); ++i) table.columns.push_back(indexed("p_P", i));
          for (std::size_t i = 0; i < model.size(); ++i) table.columns.push_back(indexed("H_P", i));
          const double combined = combine_processes(model);
          for (double t : points) {
            const auto parts = decompose_processes(model, t);
            const double scaled = combined * t;
            std::vector<double> row{t, scaled, probability_mono(scaled),
                                    entropy_mono(scaled)};
            for (const auto& part : parts) row.push_back(part.probability);
            for (const auto& part : parts) row.push_back(part.entropy);
            table.rows.push_back(std::move(row));
          }
        } else {
          table.title = "Multi-exponential model";
          table.x_label = "T";
          table.columns = {"T", "size", "p", "H"};
          for (std::size_t i = 0; i < model.size(); ++i) table.columns.push_back(indexed("p_", i));
          for (std::size_t i = 0; i < model.size(); ++i) table.columns.push_back(indexed("H_", i));
          table.columns.push_back("H_asymptote");
          if (tmax) table.columns.push_back("H_normalized");
          for (double t : points) {
            std::vector<double> row{t, multiexp_sample_space_size(model, t),
                                    multiexp_probability(model, t),
                                    multiexp_entropy(model, t)};
            for (double p : component_probabilities(model, t)) row.push_back(p);
            for (double h : component_entropies(model, t)) row.push_back(h);
            row.push_back(multiexp_entropy_asymptote(model, t));
            if (tmax) row.push_back(normalized_entropy(model, t, *tmax));
            table.rows.push_back(std::move(row));
          }
        }
      },
      config);
  return table;
}

Table build_figure(const FigureRequest& request) {
  const auto& id = request.figure_id;
  const auto& ids = figure_ids();
  if (std::find(ids.begin(), ids.end(), id) == ids.end()) {
    throw ValidationError("unknown figure id '" + id + "'; valid ids: " +
                          joined_ids());
  }
  const auto grid_or = [&](double start, double end) {
    return request.grid ? *request.grid
                        : Grid::with_points(start, end, kDefaultGridPoints);
  };

  Table table;
  table.title = "Figure " + id;

  if (id == "1" || id == "2" || id == "3") {
    table.x_label = "T";
    const auto points = grid_or(0.0, 10.0).points();
    const char* name = id == "1" ? "size" : id == "2" ? "p" : "H";
    table.y_label = name;
    table.columns = {"T", name};
    for (double t : points) {
      const double v = id == "1" ? sample_space_size(MonoExpModel(1.0, 1.0), t)
                       : id == "2" ? probability_mono(t)
                                   : entropy_mono(t);
      table.rows.push_back({t, v});
    }
    return table;
  }

  if (id == "4" || id == "5") {
    const auto procs = model_or(request, three_process_set(), "process");
    const bool entropy = id == "5";
    table.x_label = "t";
    table.y_label = entropy ? "H" : "p";
    table.columns = {"t"};
    for (std::size_t i = 0; i < procs.size(); ++i) {
      table.columns.push_back(indexed(entropy ? "H_P" : "p_P", i));
    }
    table.columns.push_back(entropy ? "H_combined" : "p_combined");
    const double combined = combine_processes(procs);
    for (double t : grid_or(0.0, 10.0 / combined).points()) {
      std::vector<double> row{t};
      for (const auto& part : decompose_processes(procs, t)) {
        row.push_back(entropy ? part.entropy : part.probability);
      }
      row.push_back(entropy ? entropy_mono(combined * t)
                            : probability_mono(combined * t));
      table.rows.push_back(std::move(row));
    }
    return table;
  }

  if (id == "6" || id == "7" || id == "8" || id == "9" || id == "10" ||
      id == "11" || id == "12") {
    const auto model = model_or(request, four_component_model(), "multi-exponential");
    table.x_label = "T";
    if (id == "12") {
      const double tmax = request.tmax.value_or(kDefaultNormalizationTmax);
      table.y_label = "H(T) / H(T_max)";
      table.columns = {"T", "H_normalized"};
      for (double t : grid_or(0.0, tmax).points()) {
        table.rows.push_back({t, normalized_entropy(model, t, tmax)});
      }
      return table;
    }
    const double end = id == "11" ? 10.0 / model.slowest().rate : 100.0;
    const auto points = grid_or(0.0, end).points();
    if (id == "6" || id == "7" || id == "8") {
      const char* name = id == "6" ? "log10_size" : id == "7" ? "p" : "H";
      table.y_label = name;
      table.columns = {"T", name};
      for (double t : points) {
        const double v = id == "6"   ? multiexp_entropy(model, t) / std::numbers::ln10
                         : id == "7" ? multiexp_probability(model, t)
                                     : multiexp_entropy(model, t);
        table.rows.push_back({t, v});
      }
      return table;
    }
    const bool entropy = id != "9";
    table.y_label = entropy ? "H" : "p";
    table.columns = {"T"};
    for (std::size_t i = 0; i < model.size(); ++i) {
      table.columns.push_back(indexed(entropy ? "H_" : "p_", i));
    }
    table.columns.push_back(entropy ? "H_total" : "p_total");
    if (id == "11") table.columns.push_back("H_asymptote");
    for (double t : points) {
      std::vector<double> row{t};
      const auto parts = entropy ? component_entropies(model, t)
                                 : component_probabilities(model, t);
      row.insert(row.end(), parts.begin(), parts.end());
      row.push_back(entropy ? multiexp_entropy(model, t)
                            : multiexp_probability(model, t));
      if (id == "11") row.push_back(multiexp_entropy_asymptote(model, t));
      table.rows.push_back(std::move(row));
    }
    return table;
  }

  if (id == "13" || id == "14") {
    auto model = model_or(request, broad_money_model(), "mono-exponential");
    if (request.s0 || request.lambda) {
      model = MonoExpModel(request.s0.value_or(model.s0()),
                           request.lambda.value_or(model.lambda()));
    }
    table.x_label = "t (years)";
    const bool entropy = id == "14";
    table.y_label = entropy ? "H" : "size";
    table.columns = {"t", entropy ? "H" : "size"};
    for (double t : grid_or(0.0, 18.0).points()) {
      table.rows.push_back(
          {t, entropy ? entropy_mono(model.scaled_time(t))
                      : sample_space_size(model, t)});
    }
    return table;
  }

  // Appendix figures: contraction.
  const ContractionModel model(request.s0.value_or(kContractionExampleS0));
  table.x_label = "t";
  const char* name = id == "A1" ? "size" : id == "A2" ? "p" : "H";
  table.y_label = name;
  table.columns = {"t", name};
  for (double t : grid_or(0.0, model.t_max()).points()) {
    const double v = id == "A1"   ? contraction_sample_space_size(model, t)
                     : id == "A2" ? contraction_probability(model, t)
                                  : contraction_entropy(model, t);
    table.rows.push_back({t, v});
  }
  return table;
}

}  // namespace expentropy::cli
