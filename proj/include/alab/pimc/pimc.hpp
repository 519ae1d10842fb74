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
#include <string>
#include <vector>

#include "alab/model/instance.hpp"
#include "alab/model/run_result.hpp"
#include "alab/model/schedule.hpp"

namespace alab::pimc {

enum class Readout { RandomSlice, MajorityVote };

std::string to_string(Readout readout);
Readout parse_readout(const std::string &text);

struct PimcParams {
    int trotter_slices = 64;
    double temperature_mK = 15.5;
    int sweeps = 1000;
    int replicas = 1000;
    std::uint64_t seed = 1;
    Readout readout = Readout::RandomSlice;
    int jobs = 1;

    void validate() const;
};

// Beyond this imaginary-time coupling the worldlines are collapsed and moved as a whole.
inline constexpr double kFreezeCoupling = 20.0;

/// K = 1/2 ln coth(beta A / M); +infinity when A = 0.
double trotter_coupling(double A, double beta, int slices);

/// Suzuki-Trotter worldlines, slices x qubits, periodic in imaginary time.
/// Action S = -K sum_{k,q} s_{k,q} s_{k+1,q} + w sum_k E_P(s_k), with w = beta B / M.
class PimcChain {
   public:
    PimcChain(const model::Instance &instance, int slices);

    int slices() const {
        return slices_;
    }
    int num_qubits() const {
        return n_;
    }
    std::int8_t spin(int slice, int qubit) const {
        return spins_[index(slice, qubit)];
    }
    void set_spin(int slice, int qubit, std::int8_t value);
    model::Spins slice_spins(int slice) const;
    bool frozen() const {
        return frozen_;
    }

    void randomize(std::mt19937_64 &rng);

    double action(double K, double w) const;
    /// Change of the action when (slice, qubit) is flipped.
    double delta_action(int slice, int qubit, double K, double w) const;

    /// One Metropolis pass over every (slice, qubit) followed by one imaginary-time cluster
    /// pass per qubit. A, B in GHz, beta in 1/GHz. Switches to frozen mode when K exceeds
    /// kFreezeCoupling.
    void sweep(double A, double B, double beta, std::mt19937_64 &rng);

    model::Spins readout(Readout mode, std::mt19937_64 &rng) const;

   private:
    std::size_t index(int slice, int qubit) const {
        return static_cast<std::size_t>(slice) * n_ + qubit;
    }
    double slice_local_field(int slice, int qubit) const;
    void metropolis_pass(double K, double w, std::mt19937_64 &rng);
    void cluster_pass(double K, double w, std::mt19937_64 &rng);
    void collapse();
    void frozen_pass(double w, std::mt19937_64 &rng);

    const model::Instance &instance_;
    int slices_;
    int n_;
    std::vector<std::int8_t> spins_;
    bool frozen_ = false;
};

/// Anneal along an explicit per-sweep (A, B) ramp.
model::RunResult pimc_anneal(const model::Instance &instance, const std::vector<model::ScheduleValue> &ramp,
                             const PimcParams &params, std::optional<double> ground_energy = std::nullopt);

/// PIMC-QA: s ramps linearly over the sweeps from 0 to 1. Engine tag "pimc-qa".
model::RunResult pimcqa_run(const model::Instance &instance, const model::Schedule &schedule,
                            const PimcParams &params, std::optional<double> ground_energy = std::nullopt);

}  // namespace alab::pimc
