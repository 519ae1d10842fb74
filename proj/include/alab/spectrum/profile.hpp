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

#include <span>
#include <string>
#include <vector>

#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"
#include "alab/spectrum/krylov.hpp"

namespace alab::spectrum {

// Gaps below this are reported as degenerate.
inline constexpr double kDegenerateGapGHz = 1e-10;

struct GapRow {
    double s = 0.0;
    double e0 = 0.0;       // GHz
    double e1 = 0.0;       // GHz
    double omega10 = 0.0;  // GHz
    double a_elem = 0.0;   // sum_mu |<0|z_mu|1>|^2
    double hamming = 0.0;  // sum_mu |<0|z_mu|0> - <1|z_mu|1>|^2 / 4
    bool degenerate = false;
    double residual = 0.0;  // worst explicit residual of the two states
    std::vector<double> polarization0;
    std::vector<double> polarization1;
};

struct GapProfile {
    int num_qubits = 0;
    std::vector<GapRow> rows;

    /// s,E0,E1,omega10,a_elem,hamming
    std::string to_csv() const;
    /// s,state,z0,z1,...
    std::string polarizations_csv() const;
};

struct ProfileOptions {
    int jobs = 1;
    // Consecutive s points solved by one warm-started chain; fixed so results do not depend on jobs.
    int chunk = 16;
    KrylovOptions krylov;
};

/// Two-level quantities of one eigen-solution.
GapRow two_level_row(double s, const EigenResult &eig, int num_qubits);

GapProfile compute_profile(const model::Instance &instance, const model::Schedule &schedule,
                           std::span<const double> s_grid, const ProfileOptions &options = {});

/// 201 uniform points refined tenfold within +-0.05 of the coarse minimum gap.
GapProfile compute_profile(const model::Instance &instance, const model::Schedule &schedule,
                           const ProfileOptions &options = {});

std::vector<double> refined_grid(std::span<const double> coarse, double s_center, double half_width, int factor);

struct MinGap {
    double s_star;
    double omega_min;  // GHz
};

/// Coarse scan followed by golden-section refinement of omega10(s).
/// Throws DegenerateInstanceError for a flat profile.
MinGap min_gap(const model::Instance &instance, const model::Schedule &schedule, int coarse_points = 41,
               double tolerance = 1e-7);

}  // namespace alab::spectrum
