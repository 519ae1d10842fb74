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

#include "alab/model/run_result.hpp"

#include <json.hpp>

#include "alab/util/stats.hpp"

namespace alab::model {

std::string RunResult::to_json() const {
    nlohmann::ordered_json j;
    j["engine"] = engine;
    j["instance_hash"] = instance_hash;
    nlohmann::ordered_json p = nlohmann::ordered_json::object();
    for (const auto &[k, v] : params) {
        p[k] = v;
    }
    j["params"] = p;
    j["successes"] = successes;
    j["replicas"] = replicas;
    j["ci_low"] = ci_low;
    j["ci_high"] = ci_high;
    j["seed"] = seed;
    return j.dump(2);
}

void set_outcome(RunResult &result, std::int64_t successes, std::int64_t replicas) {
    result.successes = successes;
    result.replicas = replicas;
    auto ci = util::wilson_interval(successes, replicas);
    result.ci_low = ci.low;
    result.ci_high = ci.high;
}

}  // namespace alab::model
