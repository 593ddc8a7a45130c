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

#include "vqeg/trace_io.hpp"

#include <fstream>

namespace vqeg {

using nlohmann::json;

std::string shotsLabel(const EvalMode& mode) {
  return mode.isExact() ? std::string("exact")
                        : std::to_string(mode.shotCount());
}

json configJson(const EGConfig& cfg) {
  json j;
  j["steps"] = cfg.steps;
  j["eta"] = cfg.eta;
  j["shots"] = shotsLabel(cfg.mode);
  j["box"] = cfg.box_halfwidth;
  j["seed"] = cfg.seed;
  j["layers_row"] = cfg.layers_row;
  j["layers_col"] = cfg.layers_col;
  j["record_every"] = cfg.record_every;
  j["c_margin"] = cfg.c_margin;
  return j;
}

json summaryJson(const RunResult& result) {
  const EGConfig& cfg = result.config;
  json j;
  j["final_gap_last"] = result.final_gap_last;
  j["final_gap_avg"] = result.final_gap_avg;
  j["passed"] = result.passed;
  j["seed"] = cfg.seed;
  j["eta"] = cfg.eta;
  j["shots"] = shotsLabel(cfg.mode);
  j["layers"] = cfg.layers_row;
  j["T"] = cfg.steps;
  j["config"] = configJson(cfg);
  return j;
}

void writeTrace(std::ostream& out, const RunTrace& trace,
                const json& summary) {
  for (const TraceRecord& r : trace) {
    json line;
    line["t"] = r.t;
    line["value"] = r.value;
    line["gap"] = r.gap;
    line["avg_gap"] = r.avg_gap;
    line["residual"] = r.residual;
    line["leak_row"] = r.leak_row;
    line["leak_col"] = r.leak_col;
    line["evals"] = r.evals;
    out << line.dump() << "\n";
  }
  out << summary.dump() << "\n";
}

void writeTraceFile(const std::string& path, const RunTrace& trace,
                    const json& summary) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open trace file for writing: " + path);
  writeTrace(out, trace, summary);
}

}  // namespace vqeg
