// Copyright 2026 The jsc-sim Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace jsc {

// JSC_SIM_THREADS if set to a positive integer, otherwise hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(index, worker) for index in [0, n) on up to `workers` threads.
/// Work is handed out dynamically; the first exception thrown is rethrown after all workers stop.
void parallel_for(std::size_t n, std::size_t workers,
                  const std::function<void(std::size_t index, std::size_t worker)>& body);

}  // namespace jsc
