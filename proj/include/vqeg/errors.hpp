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

#include <stdexcept>
#include <string>

namespace vqeg {

// A strategy restriction or construction left no probability mass on real
// actions.
class DegenerateStrategyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver gave up; carries the iteration count at failure.
class SolverFailure : public std::runtime_error {
 public:
  SolverFailure(const std::string& what, long iterations)
      : std::runtime_error(what + " (after " + std::to_string(iterations) +
                           " iterations)"),
        iterations_(iterations) {}

  long iterations() const { return iterations_; }

 private:
  long iterations_;
};

// A file could not be parsed into the expected format.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace vqeg
