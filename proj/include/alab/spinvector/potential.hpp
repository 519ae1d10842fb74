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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"

namespace alab::spinvector {

/// sv_energy with every Left qubit at theta_left and every Right qubit at theta_right.
/// Requires every qubit to carry a Left or Right label.
double effective_potential(const model::Instance &instance, double s, double theta_left, double theta_right,
                           const model::Schedule &schedule);

struct PathPoint {
    double s;
    double theta_left;
    double theta_right;
    double value;  // GHz
};

struct MinimumPath {
    std::string label;  // "initial" or "second"
    std::vector<PathPoint> points;
};

struct PotentialSurface {
    std::vector<double> s_values;
    std::vector<double> theta_values;
    std::vector<double> values;  // [s][theta_left], minimised over theta_right
    std::vector<MinimumPath> paths;
    std::optional<double> bifurcation_s;
    std::optional<double> crossover_s;

    const MinimumPath &path(const std::string &label) const;

    /// s,theta_L,V
    std::string to_csv() const;
    /// label,s,theta_L,theta_R,V
    std::string paths_csv() const;
};

struct TraceOptions {
    int theta_points = 181;        // surface resolution over [-pi/2, pi/2]
    int scan_points = 1440;        // periodic theta_L scan used to spot new minima
    double tolerance = 1e-6;       // golden-section tolerance, radians
    double max_step = 0.5;         // largest allowed jump of a followed minimum between s points
    bool include_surface = true;
};

/// Follows the local minimum starting from the transverse ground state (the "initial"
/// path), detects when a second minimum with the left cluster reversed appears, tracks it,
/// and records where it becomes the lower one.
/// Throws GridResolutionError when the followed minimum jumps by more than max_step.
PotentialSurface trace_minima(const model::Instance &instance, const model::Schedule &schedule,
                              std::span<const double> s_grid, const TraceOptions &options = {});

std::vector<double> uniform_grid(double lo, double hi, int points);

}  // namespace alab::spinvector
