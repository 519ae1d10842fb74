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
#include <optional>
#include <random>

#include "alab/model/constants.hpp"
#include "alab/model/instance.hpp"
#include "alab/model/run_result.hpp"
#include "alab/model/schedule.hpp"
#include "alab/spinvector/spin_vector.hpp"

namespace alab::spinvector {

struct SVMCParams {
    int sweeps = 1000;
    double temperature_mK = 15.5;
    double proposal_width = model::kPi / 2;
    int replicas = 1000;
    std::uint64_t seed = 1;
    int jobs = 1;

    void validate() const;
};

/// Metropolis chain over spin-vector angles. One sweep visits every qubit once in index
/// order, proposing theta + U(-width, width) and accepting with min(1, exp(-dE / kT)).
class SvmcChain {
   public:
    SvmcChain(const model::Instance &instance, double proposal_width);

    void sweep(double A, double B, double kT_ghz, std::mt19937_64 &rng);

    const SpinVectorState &angles() const {
        return angles_;
    }
    void set_angles(std::span<const double> angles);

   private:
    const model::Instance &instance_;
    double width_;
    SpinVectorState angles_;
    std::vector<double> sin_;
    std::vector<double> cos_;
};

/// Runs `replicas` independent SVMC anneals. s ramps linearly from 0 (first sweep) to 1
/// (last sweep); angles start at 0 (transverse ground state). A replica succeeds when its
/// projected spins reach `ground_energy` (computed with reference_ground when absent).
model::RunResult svmc_run(const model::Instance &instance, const model::Schedule &schedule, const SVMCParams &params,
                          std::optional<double> ground_energy = std::nullopt);

/// s value used at sweep k of `sweeps`.
double sweep_s(int k, int sweeps);

}  // namespace alab::spinvector
