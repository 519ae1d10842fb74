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
#include <vector>

namespace alab::harness {

struct ScalingPoint {
    int n_q;
    std::int64_t successes;
    std::int64_t replicas;
};

struct ScalingFitPoint {
    int n_q;
    double mean_p;
    double ci_low;
    double ci_high;
};

/// p(n_q) ~ exp(intercept - alpha n_q).
struct ScalingFit {
    double alpha = 0.0;
    double alpha_err = 0.0;  // bootstrap standard deviation
    double intercept = 0.0;
    double r_squared = 0.0;
    int resamples = 0;
    std::vector<ScalingFitPoint> points;  // sorted by n_q

    /// alpha,alpha_err,intercept,r_squared,resamples
    std::string to_csv() const;
};

/// Weighted least squares of ln p on n_q (weights n p / (1 - p)); entries sharing n_q are pooled.
/// alpha_err comes from parametric bootstrap redraws of every size's replica outcomes.
/// Throws std::invalid_argument for fewer than three sizes or a size with zero successes.
ScalingFit fit_scaling(std::vector<ScalingPoint> points, int resamples = 2000, std::uint64_t seed = 1);

/// Reads n_q,successes,replicas columns.
std::vector<ScalingPoint> scaling_points_from_csv(const std::string &text);

}  // namespace alab::harness
