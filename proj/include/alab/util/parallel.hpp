// Copyright 2026 The Annealer Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <functional>

namespace alab::util {

/// Worker count after applying the ANNEALER_LAB_THREADS cap. requested <= 0 means
/// "hardware concurrency".
int resolve_jobs(int requested);

/// Runs body(i) for i in [0, count) on up to `jobs` threads. Each index runs exactly once;
/// callers write results into per-index slots so output never depends on scheduling.
/// The first exception thrown by any body is rethrown after all workers stop.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)> &body);

}  // namespace alab::util
