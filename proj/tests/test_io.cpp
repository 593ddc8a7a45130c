// Copyright 2026 The VQEG Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "vqeg/instances.hpp"
#include "vqeg/matrix_io.hpp"
#include "vqeg/trace_io.hpp"

using namespace vqeg;
using nlohmann::json;

TEST_CASE("matrix files round trip bit-exactly") {
  const GameInstance g = genRandom(5, 99);
  std::stringstream buffer;
  writeMatrix(buffer, g.matrix);
  const PayoffMatrix back = readMatrix(buffer);
  CHECK(back.rows() == 5);
  CHECK(back.cols() == 5);
  CHECK(back.entries() == g.matrix.entries());
}

TEST_CASE("matrix reader validates the schema") {
  auto parse = [](const std::string& text) {
    std::stringstream in(text);
    return readMatrix(in);
  };
  CHECK_THROWS_AS(parse("not json"), ParseError);
  CHECK_THROWS_AS(parse("{\"m\": 2, \"n\": 2}"), ParseError);
  CHECK_THROWS_AS(parse("{\"m\": 2, \"n\": 2, \"entries\": [[1, 2]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse("{\"m\": 1, \"n\": 2, \"entries\": [[1, 2, 3]]}"),
                  ParseError);
  CHECK_THROWS_AS(parse("{\"m\": 1, \"n\": 1, \"entries\": [[\"x\"]]}"),
                  ParseError);

  const PayoffMatrix ok =
      parse("{\"m\": 2, \"n\": 2, \"entries\": [[1, -1], [-1, 1]]}");
  CHECK(ok.entries()(0, 1) == -1.0);
}

TEST_CASE("missing files raise parse errors") {
  CHECK_THROWS_AS(readMatrixFile("/nonexistent/game.json"), ParseError);
}

TEST_CASE("trace lines carry the fixed key set and the summary echoes config") {
  EGConfig cfg;
  cfg.steps = 12;
  cfg.record_every = 4;
  cfg.seed = 5;
  const auto [result, trace] = runVqeg(genMatchingPennies(2), cfg);

  std::stringstream out;
  writeTrace(out, trace, summaryJson(result));

  std::vector<json> lines;
  std::string line;
  while (std::getline(out, line)) {
    if (!line.empty()) lines.push_back(json::parse(line));
  }
  REQUIRE(lines.size() == trace.size() + 1);

  for (std::size_t i = 0; i < trace.size(); ++i) {
    const json& rec = lines[i];
    for (const char* key : {"t", "value", "gap", "avg_gap", "residual",
                            "leak_row", "leak_col", "evals"}) {
      CHECK(rec.contains(key));
    }
    CHECK(rec["t"].get<long>() == trace[i].t);
    CHECK(rec["gap"].get<double>() == trace[i].gap);
  }

  const json& summary = lines.back();
  for (const char* key : {"final_gap_last", "final_gap_avg", "passed", "seed",
                          "eta", "shots", "layers", "T", "config"}) {
    CHECK(summary.contains(key));
  }
  CHECK(summary["shots"] == "exact");
  CHECK(summary["T"].get<long>() == 12);
  CHECK(summary["config"]["record_every"].get<long>() == 4);

  // Rebuilding the run from the echoed config reproduces the result.
  EGConfig echoed;
  echoed.steps = summary["config"]["steps"].get<long>();
  echoed.eta = summary["config"]["eta"].get<double>();
  echoed.seed = summary["config"]["seed"].get<std::uint64_t>();
  echoed.layers_row = summary["config"]["layers_row"].get<int>();
  echoed.layers_col = summary["config"]["layers_col"].get<int>();
  echoed.record_every = summary["config"]["record_every"].get<long>();
  echoed.box_halfwidth = summary["config"]["box"].get<double>();
  echoed.c_margin = summary["config"]["c_margin"].get<double>();
  const auto [again, _] = runVqeg(genMatchingPennies(2), echoed);
  CHECK(again.final_gap_last == result.final_gap_last);
  CHECK(again.final_params.stacked() == result.final_params.stacked());
}

TEST_CASE("shot labels") {
  CHECK(shotsLabel(EvalMode::exact()) == "exact");
  CHECK(shotsLabel(EvalMode::shots(256)) == "256");
}
