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

#include <functional>

namespace vqeg {

/// Worker-thread count: VQEG_THREADS when set (min 1), otherwise the
/// hardware concurrency.
int threadCount();

/// Runs fn(i) for i in [0, n) on up to `threads` workers. Each index is
/// executed exactly once; the caller owns any per-index output slots, so
/// results are independent of scheduling. The first exception thrown by a
/// worker is rethrown after all workers finish.
void parallelFor(long n, int threads, const std::function<void(long)>& fn);

}  // namespace vqeg
