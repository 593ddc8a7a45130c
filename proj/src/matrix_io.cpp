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

#include "vqeg/matrix_io.hpp"

#include <fstream>
#include <json.hpp>

namespace vqeg {

namespace {
using nlohmann::json;
}

PayoffMatrix readMatrix(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") ||
      !doc.contains("entries")) {
    throw ParseError("matrix file must be {\"m\", \"n\", \"entries\"}");
  }
  const auto m = doc["m"].get<Eigen::Index>();
  const auto n = doc["n"].get<Eigen::Index>();
  const auto& entries = doc["entries"];
  if (m < 1 || n < 1 || !entries.is_array() ||
      static_cast<Eigen::Index>(entries.size()) != m) {
    throw ParseError("matrix entries do not match the declared dimensions");
  }
  Matrix a(m, n);
  for (Eigen::Index i = 0; i < m; ++i) {
    const auto& row = entries[i];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
      throw ParseError("matrix row " + std::to_string(i) +
                       " does not have n entries");
    }
    for (Eigen::Index j = 0; j < n; ++j) {
      if (!row[j].is_number()) {
        throw ParseError("matrix entries must be numbers");
      }
      a(i, j) = row[j].get<double>();
    }
  }
  try {
    return PayoffMatrix(std::move(a));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

PayoffMatrix readMatrixFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  return readMatrix(in);
}

void writeMatrix(std::ostream& out, const PayoffMatrix& a) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a.entries()(i, j));
    rows.push_back(std::move(row));
  }
  json doc;
  doc["m"] = a.rows();
  doc["n"] = a.cols();
  doc["entries"] = std::move(rows);
  out << doc.dump() << "\n";
}

void writeMatrixFile(const std::string& path, const PayoffMatrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  writeMatrix(out, a);
}

}  // namespace vqeg
