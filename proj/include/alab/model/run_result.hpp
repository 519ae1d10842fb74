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

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace alab::model {

/// Outcome of a seeded stochastic annealing run (SVMC or PIMC-QA).
struct RunResult {
    std::string engine;
    std::string instance_hash;
    std::vector<std::pair<std::string, std::string>> params;  // insertion ordered
    std::int64_t successes = 0;
    std::int64_t replicas = 0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::uint64_t seed = 0;

    double success_probability() const {
        return replicas > 0 ? static_cast<double>(successes) / static_cast<double>(replicas) : 0.0;
    }

    /// {"engine", "instance_hash", "params", "successes", "replicas", "ci_low", "ci_high", "seed"}
    std::string to_json() const;
};

/// Fills successes/replicas and the 95% Wilson interval.
void set_outcome(RunResult &result, std::int64_t successes, std::int64_t replicas);

}  // namespace alab::model
