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

#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "vqeg/eg.hpp"

namespace vqeg {

/// "exact" or the shot count, as serialized in traces and CSVs.
std::string shotsLabel(const EvalMode& mode);

/// Resolved run configuration as a JSON object, suitable for echoing into
/// output files so a run can be reproduced from its own artifacts.
nlohmann::json configJson(const EGConfig& cfg);

/// Summary object appended as the last trace line: final gaps, pass flag,
/// and the key run parameters, plus the full config echo under "config".
nlohmann::json summaryJson(const RunResult& result);

/// Writes the run as JSON Lines: one object per recorded iteration with
/// keys {"t","value","gap","avg_gap","residual","leak_row","leak_col",
/// "evals"}, then the summary object.
void writeTrace(std::ostream& out, const RunTrace& trace,
                const nlohmann::json& summary);

void writeTraceFile(const std::string& path, const RunTrace& trace,
                    const nlohmann::json& summary);

}  // namespace vqeg
