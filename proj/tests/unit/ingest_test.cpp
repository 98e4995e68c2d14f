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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "expentropy/errors.hpp"

namespace expentropy {
namespace {

const SeriesFileSpec kYearSpec{"inline.csv", "year", "usd_tn", std::nullopt};

TimeSeries parse_csv(const std::string& text, const SeriesFileSpec& spec = kYearSpec) {
  std::istringstream in(text);
  return parse_series(in, spec, "inline.csv");
}

std::string ingest_error(const std::string& text) {
  try {
    parse_csv(text);
  } catch (const IngestError& e) {
    return e.what();
  }
  return {};
}

ModelConfig parse_model_text(const std::string& text) {
  std::istringstream in(text);
  return parse_model(in, "inline.model");
}

std::string model_error(const std::string& text) {
  try {
    parse_model_text(text);
  } catch (const IngestError& e) {
    return e.what();
  }
  return {};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(ParseNumber, AcceptsDecimalAndScientific) {
  EXPECT_EQ(parse_number("7.58"), 7.58);
  EXPECT_EQ(parse_number(" 1e-3 "), 1e-3);
  EXPECT_EQ(parse_number("+2.5E2"), 250.0);
  EXPECT_EQ(parse_number("-4"), -4.0);
}

TEST(ParseNumber, RejectsGarbage) {
  EXPECT_FALSE(parse_number(""));
  EXPECT_FALSE(parse_number("1 000"));
  EXPECT_FALSE(parse_number("1'000"));
  EXPECT_FALSE(parse_number("7.5805 trillion"));
  EXPECT_FALSE(parse_number("inf"));
  EXPECT_FALSE(parse_number("nan"));
  EXPECT_FALSE(parse_number("0x10"));
}

TEST(LoadSeries, FirstRowAsOrigin) {
  const auto series = parse_csv("year,usd_tn\n2001,7.58\n2002,8.01\n");
  EXPECT_EQ(series.origin_label, "2001");
  ASSERT_EQ(series.points.size(), 2u);
  EXPECT_EQ(series.points[0], (SeriesPoint{0.0, 7.58}));
  EXPECT_EQ(series.points[1], (SeriesPoint{1.0, 8.01}));
}

TEST(LoadSeries, ExplicitOriginAndCrlf) {
  auto spec = kYearSpec;
  spec.origin = 2000.0;
  const auto series = parse_csv("usd_tn,year\r\n7.58,2001\r\n8.01,2002\r\n", spec);
  EXPECT_EQ(series.origin_label, "2000");
  EXPECT_EQ(series.points[0].t, 1.0);
  EXPECT_EQ(series.points[1].t, 2.0);
}

TEST(LoadSeries, NoiselessFixtureHasNineteenPoints) {
  const auto series = load_series({EXPENTROPY_TEST_DATA_DIR "/broad_money_noiseless.csv",
                                   "year", "usd_tn", std::nullopt});
  ASSERT_EQ(series.points.size(), 19u);
  EXPECT_NO_THROW(series.validate());
  EXPECT_EQ(series.points.front().value, 7.5805);
  EXPECT_EQ(series.points.back().t, 18.0);
}

TEST(LoadSeries, ErrorsNameFileRowAndRule) {
  EXPECT_TRUE(contains(ingest_error("year,usd_tn\n2001,7.58\n2002,0\n"),
                       "inline.csv:row 3: nonpositive value"));
  EXPECT_TRUE(contains(ingest_error("year,usd_tn\n2001,7.58\n"), "need at least 2 points"));
  EXPECT_TRUE(contains(ingest_error("year,value\n2001,7.58\n2002,8\n"),
                       "missing column 'usd_tn'"));
  EXPECT_TRUE(contains(ingest_error("year,usd_tn\n2001,7.58\n2002,abc\n"),
                       "row 3: unparsable number 'abc'"));
  EXPECT_TRUE(contains(ingest_error("year,usd_tn\n2001,7.58\n2001,8\n"),
                       "row 3: duplicate time 2001"));
  EXPECT_TRUE(contains(ingest_error("year,usd_tn\n2001,7.58\n2002,1,000\n"),
                       "row 3: expected 2 fields, got 3"));
  EXPECT_TRUE(contains(ingest_error(""), "no header"));
}

TEST(LoadSeries, MissingFile) {
  try {
    load_series({"/nonexistent/series.csv", "year", "usd_tn", std::nullopt});
    FAIL();
  } catch (const IngestError& e) {
    EXPECT_EQ(e.file(), "/nonexistent/series.csv");
    EXPECT_TRUE(contains(e.what(), "cannot open"));
  }
}

TEST(LoadSeries, SpecValidation) {
  EXPECT_THROW(parse_csv("a,b\n1,2\n2,3\n", {"x", "a", "a", std::nullopt}), ValidationError);
  EXPECT_THROW(parse_csv("a,b\n1,2\n2,3\n", {"x", "", "b", std::nullopt}), ValidationError);
}

TEST(LoadSeries, OrderInsensitive) {
  std::vector<std::string> rows;
  for (int y = 2001; y <= 2019; ++y) {
    rows.push_back(std::to_string(y) + "," + std::to_string(7.5 + 0.3 * (y - 2001)));
  }
  const auto join = [](const std::vector<std::string>& r) {
    std::string text = "year,usd_tn\n";
    for (const auto& row : r) text += row + "\n";
    return text;
  };
  const auto sorted = parse_csv(join(rows));
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(rows.begin(), rows.end(), rng);
    EXPECT_EQ(parse_csv(join(rows)), sorted);
  }
}

TEST(LoadModel, FourComponentFile) {
  const auto config = load_model(EXPENTROPY_DATA_DIR "/four_component.model");
  const auto* model = std::get_if<MultiExpModel>(&config);
  ASSERT_NE(model, nullptr);
  ASSERT_EQ(model->size(), 4u);
  EXPECT_EQ(model->components()[0], (ExpComponent{0.4, 1.0}));
  EXPECT_EQ(model->slowest(), (ExpComponent{0.1, 0.001}));
}

TEST(LoadModel, ProcessesAndMono) {
  const auto procs = load_model(EXPENTROPY_DATA_DIR "/three_processes.model");
  ASSERT_TRUE(std::holds_alternative<ProcessSet>(procs));
  EXPECT_EQ(std::get<ProcessSet>(procs), ProcessSet({0.1, 0.3, 0.6}));
  const auto mono = parse_model_text("s0 = 7.5805   # trillions\nlambda=0.0555\n");
  EXPECT_EQ(std::get<MonoExpModel>(mono), MonoExpModel(7.5805, 0.0555));
}

TEST(LoadModel, Errors) {
  EXPECT_TRUE(contains(model_error("component = 0.6, 1\ncomponent = 0.6, 0.1\n"),
                       "weights must sum to 1, got sum 1.2"));
  EXPECT_TRUE(contains(model_error("speed = 3\n"), "line 1: unknown key 'speed'"));
  EXPECT_TRUE(contains(model_error("s0 = 2\nlambda = 1\nprocess = 0.1\n"), "exactly one"));
  EXPECT_TRUE(contains(model_error("s0 = 2\n"), "needs lambda"));
  EXPECT_TRUE(contains(model_error("s0 = 2\ns0 = 3\nlambda = 1\n"), "given twice"));
  EXPECT_TRUE(contains(model_error("process = -1\n"), "rate must be > 0"));
  EXPECT_TRUE(contains(model_error("component = 1\n"), "component must be 'A, c'"));
  EXPECT_TRUE(contains(model_error("process 0.1\n"), "expected 'key = value'"));
  EXPECT_TRUE(contains(model_error("# nothing\n"), "no model keys"));
  EXPECT_TRUE(contains(model_error("s0 = 0.5\nlambda = 1\n"), "s0 must be >= 1"));
  EXPECT_THROW(load_model("/nonexistent/x.model"), IngestError);
}

TEST(SerializeModel, RoundTripsRandomConfigs) {
  std::mt19937_64 rng(0x5eed000f);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    ModelConfig config = MonoExpModel(1.0 + 1e3 * unit(rng), 1e-3 + unit(rng));
    if (trial % 3 == 1) {
      config = ProcessSet({1e-3 + unit(rng), 1e-3 + unit(rng)});
    } else if (trial % 3 == 2) {
      const double a = 0.05 + 0.9 * unit(rng);
      config = MultiExpModel({{a, 1.0}, {1.0 - a, 1e-4 + 0.5 * unit(rng)}});
    }
    EXPECT_EQ(parse_model_text(serialize_model(config)), config);
  }
}

}  // namespace
}  // namespace expentropy
