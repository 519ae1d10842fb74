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

#include "alab/spinvector/svmc.hpp"

#include <cmath>
#include <stdexcept>

#include "alab/model/ground.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/parallel.hpp"
#include "alab/util/rng.hpp"

namespace alab::spinvector {

void SVMCParams::validate() const {
    if (sweeps < 1) {
        throw std::invalid_argument("svmc: sweeps must be >= 1");
    }
    if (!(temperature_mK > 0)) {
        throw std::invalid_argument("svmc: temperature must be positive");
    }
    if (replicas < 1) {
        throw std::invalid_argument("svmc: replicas must be >= 1");
    }
    if (!(proposal_width > 0) || proposal_width > model::kPi) {
        throw std::invalid_argument("svmc: proposal_width must lie in (0, pi]");
    }
}

SvmcChain::SvmcChain(const model::Instance &instance, double proposal_width)
    : instance_(instance),
      width_(proposal_width),
      angles_(instance.num_qubits(), 0.0),
      sin_(instance.num_qubits(), 0.0),
      cos_(instance.num_qubits(), 1.0) {
}

void SvmcChain::set_angles(std::span<const double> angles) {
    if (angles.size() != angles_.size()) {
        throw std::invalid_argument("SvmcChain::set_angles: length mismatch");
    }
    for (std::size_t q = 0; q < angles.size(); ++q) {
        angles_[q] = wrap_angle(angles[q]);
        sin_[q] = std::sin(angles_[q]);
        cos_[q] = std::cos(angles_[q]);
    }
}

void SvmcChain::sweep(double A, double B, double kT_ghz, std::mt19937_64 &rng) {
    const double inv_kT = 1.0 / kT_ghz;
    const auto h = instance_.fields();
    const int n = instance_.num_qubits();
    for (int q = 0; q < n; ++q) {
        double proposal = wrap_angle(angles_[q] + width_ * (2.0 * util::uniform01(rng) - 1.0));
        double field = h[q];
        for (const auto &nb : instance_.neighbors(q)) {
            field += nb.coupling * sin_[nb.qubit];
        }
        double s_new = std::sin(proposal), c_new = std::cos(proposal);
        double dE = -A * (c_new - cos_[q]) - B * field * (s_new - sin_[q]);
        double u = util::uniform01(rng);
        if (dE <= 0.0 || u < std::exp(-dE * inv_kT)) {
            angles_[q] = proposal;
            sin_[q] = s_new;
            cos_[q] = c_new;
        }
    }
}

double sweep_s(int k, int sweeps) {
    return sweeps == 1 ? 1.0 : static_cast<double>(k) / (sweeps - 1);
}

model::RunResult svmc_run(const model::Instance &instance, const model::Schedule &schedule, const SVMCParams &params,
                          std::optional<double> ground_energy) {
    params.validate();
    double e_ground = ground_energy ? *ground_energy : model::reference_ground(instance).energy;
    std::vector<model::ScheduleValue> ramp(params.sweeps);
    for (int k = 0; k < params.sweeps; ++k) {
        ramp[k] = schedule.at(sweep_s(k, params.sweeps));
    }
    const double kT = model::thermal_energy_ghz(params.temperature_mK);
    std::vector<std::uint8_t> success(params.replicas, 0);
    util::parallel_for(params.replicas, params.jobs, [&](std::size_t r) {
        auto rng = util::derived_stream(params.seed, r, 0x73766d63ULL);
        SvmcChain chain(instance, params.proposal_width);
        for (const auto &ab : ramp) {
            chain.sweep(ab.A, ab.B, kT, rng);
        }
        success[r] = model::is_ground(instance, project_to_spins(chain.angles()), e_ground) ? 1 : 0;
    });
    std::int64_t hits = 0;
    for (auto s : success) {
        hits += s;
    }
    model::RunResult result;
    result.engine = "svmc";
    result.instance_hash = instance.hash();
    result.params = {{"sweeps", std::to_string(params.sweeps)},
                     {"temperature_mK", util::format_number(params.temperature_mK)},
                     {"proposal_width", util::format_number(params.proposal_width)},
                     {"replicas", std::to_string(params.replicas)}};
    result.seed = params.seed;
    model::set_outcome(result, hits, params.replicas);
    return result;
}

}  // namespace alab::spinvector
