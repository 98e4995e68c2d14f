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

#include <optional>
#include <string>
#include <vector>

#include "expentropy/ingest.hpp"
#include "output.hpp"

namespace expentropy::cli {

inline constexpr int kDefaultGridPoints = 201;
inline constexpr double kDefaultNormalizationTmax = 1000.0;

/// Parameters the figures are drawn for unless overridden.
MultiExpModel four_component_model();
ProcessSet three_process_set();
MonoExpModel broad_money_model();
inline constexpr double kContractionExampleS0 = 1000.0;

struct FigureRequest {
  std::string figure_id;
  std::optional<Grid> grid;
  std::optional<double> tmax;          // figure 12
  std::optional<ModelConfig> model;    // figures 4-14
  std::optional<double> s0;            // figures 13-14, A1-A3
  std::optional<double> lambda;        // figures 13-14
};

/// "1".."14", "A1", "A2", "A3".
const std::vector<std::string>& figure_ids();

/// Throws ValidationError for an unknown id (listing the valid ones) or a
/// model override of the wrong kind; DomainError for grids outside the
/// figure's domain.
Table build_figure(const FigureRequest& request);

/// Natural domain of `config` sampled at kDefaultGridPoints points.
Grid default_model_grid(const ModelConfig& config,
                        std::optional<double> tmax = std::nullopt);

/// Per-point evaluation of any model kind; see the README for columns.
Table model_table(const ModelConfig& config, const Grid& grid,
                  std::optional<double> tmax = std::nullopt);

}  // namespace expentropy::cli
