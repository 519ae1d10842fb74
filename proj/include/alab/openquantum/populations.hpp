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

#include <string>
#include <vector>

#include "alab/openquantum/noise.hpp"
#include "alab/openquantum/rates.hpp"
#include "alab/spectrum/profile.hpp"

namespace alab::openquantum {

struct PopulationRow {
    double s;
    double p0;
    double p1;
    double p0_eq;
};

struct PopulationTrace {
    std::vector<PopulationRow> rows;

    double success_probability() const {
        return rows.empty() ? 0.0 : rows.back().p0;
    }
    /// s,p0,p1,p0_eq
    std::string to_csv() const;
};

/// Integrates dp1/dt = -Gamma_down p1 + Gamma_up p0 along t = s t_qa with an exponential
/// integrator; rates are log-interpolated between grid points. Starts at thermal equilibrium.
PopulationTrace evolve_populations(const std::vector<RatePoint> &rates, double temperature_mK, double t_qa_s,
                                   int substeps = 32);

PopulationTrace evolve_populations(const spectrum::GapProfile &profile, const NoiseParams &params, double t_qa_s,
                                   RateKind kind, int jobs = 1);

}  // namespace alab::openquantum
