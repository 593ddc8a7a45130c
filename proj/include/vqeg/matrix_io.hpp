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

#include "vqeg/game.hpp"

namespace vqeg {

/// File format: UTF-8 JSON object
///   {"m": int, "n": int, "entries": [[row-major reals]]}
/// where entries holds m rows of n values each. Doubles are written with
/// shortest round-trip precision, so write/read is bit-exact.

PayoffMatrix readMatrix(std::istream& in);
PayoffMatrix readMatrixFile(const std::string& path);

void writeMatrix(std::ostream& out, const PayoffMatrix& a);
void writeMatrixFile(const std::string& path, const PayoffMatrix& a);

}  // namespace vqeg
