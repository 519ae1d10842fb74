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

#include "alab/pimc/pimc.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "alab/model/constants.hpp"
#include "alab/model/ground.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/parallel.hpp"
#include "alab/util/rng.hpp"

namespace alab::pimc {

namespace {

constexpr std::uint64_t kStreamTag = 0x70696d63ULL;

bool accept(double delta, std::mt19937_64 &rng) {
    return delta <= 0.0 || util::uniform01(rng) < std::exp(-delta);
}

}  // namespace

std::string to_string(Readout readout) {
    return readout == Readout::RandomSlice ? "random-slice" : "majority-vote";
}

Readout parse_readout(const std::string &text) {
    if (text == "random-slice" || text == "RandomSlice") {
        return Readout::RandomSlice;
    }
    if (text == "majority-vote" || text == "MajorityVote") {
        return Readout::MajorityVote;
    }
    throw std::invalid_argument("unknown PIMC readout '" + text + "'");
}

void PimcParams::validate() const {
    if (trotter_slices < 2) {
        throw std::invalid_argument("pimc: trotter_slices must be >= 2");
    }
    if (!(temperature_mK > 0)) {
        throw std::invalid_argument("pimc: temperature must be positive");
    }
    if (sweeps < 1) {
        throw std::invalid_argument("pimc: sweeps must be >= 1");
    }
    if (replicas < 1) {
        throw std::invalid_argument("pimc: replicas must be >= 1");
    }
}

double trotter_coupling(double A, double beta, int slices) {
    double x = beta * A / slices;
    if (!(x > 0)) {
        return std::numeric_limits<double>::infinity();
    }
    return 0.5 * std::log(1.0 / std::tanh(x));
}

PimcChain::PimcChain(const model::Instance &instance, int slices)
    : instance_(instance), slices_(slices), n_(instance.num_qubits()) {
    if (slices < 2) {
        throw std::invalid_argument("PimcChain: need at least two slices");
    }
    spins_.assign(static_cast<std::size_t>(slices_) * n_, 1);
}

void PimcChain::set_spin(int slice, int qubit, std::int8_t value) {
    if (value != 1 && value != -1) {
        throw std::invalid_argument("PimcChain::set_spin: spins are +-1");
    }
    spins_.at(index(slice, qubit)) = value;
}

model::Spins PimcChain::slice_spins(int slice) const {
    return model::Spins(spins_.begin() + static_cast<std::ptrdiff_t>(index(slice, 0)),
                        spins_.begin() + static_cast<std::ptrdiff_t>(index(slice, 0) + n_));
}

void PimcChain::randomize(std::mt19937_64 &rng) {
    for (auto &s : spins_) {
        s = (rng() >> 63) ? 1 : -1;
    }
    frozen_ = false;
}

double PimcChain::slice_local_field(int slice, int qubit) const {
    double f = instance_.fields()[qubit];
    const std::int8_t *row = spins_.data() + index(slice, 0);
    for (const auto &nb : instance_.neighbors(qubit)) {
        f += nb.coupling * row[nb.qubit];
    }
    return f;
}

double PimcChain::action(double K, double w) const {
    double bonds = 0.0, energy = 0.0;
    for (int k = 0; k < slices_; ++k) {
        int next = (k + 1) % slices_;
        for (int q = 0; q < n_; ++q) {
            bonds += spins_[index(k, q)] * spins_[index(next, q)];
        }
        energy += model::energy(instance_, slice_spins(k));
    }
    return -K * bonds + w * energy;
}

double PimcChain::delta_action(int slice, int qubit, double K, double w) const {
    int prev = (slice + slices_ - 1) % slices_;
    int next = (slice + 1) % slices_;
    double s = spins_[index(slice, qubit)];
    double neighbours = spins_[index(prev, qubit)] + spins_[index(next, qubit)];
    return 2.0 * s * (K * neighbours + w * slice_local_field(slice, qubit));
}

void PimcChain::metropolis_pass(double K, double w, std::mt19937_64 &rng) {
    for (int k = 0; k < slices_; ++k) {
        for (int q = 0; q < n_; ++q) {
            if (accept(delta_action(k, q, K, w), rng)) {
                spins_[index(k, q)] = static_cast<std::int8_t>(-spins_[index(k, q)]);
            }
        }
    }
}

// Swendsen-Wang bonds along imaginary time only. Each segment is then flipped with a
// Metropolis test on its in-slice energy change.
void PimcChain::cluster_pass(double K, double w, std::mt19937_64 &rng) {
    const double p_bond = -std::expm1(-2.0 * K);
    std::vector<std::uint8_t> bond(slices_);
    for (int q = 0; q < n_; ++q) {
        int first_cut = -1;
        for (int k = 0; k < slices_; ++k) {
            int next = (k + 1) % slices_;
            bond[k] = spins_[index(k, q)] == spins_[index(next, q)] && util::uniform01(rng) < p_bond;
            if (!bond[k] && first_cut < 0) {
                first_cut = k;
            }
        }
        if (first_cut < 0) {
            double delta = 0.0;
            for (int k = 0; k < slices_; ++k) {
                delta += 2.0 * spins_[index(k, q)] * slice_local_field(k, q);
            }
            if (accept(w * delta, rng)) {
                for (int k = 0; k < slices_; ++k) {
                    spins_[index(k, q)] = static_cast<std::int8_t>(-spins_[index(k, q)]);
                }
            }
            continue;
        }
        // Segments start right after a cut; walk once around the ring from first_cut + 1.
        int start = (first_cut + 1) % slices_;
        int k = start;
        for (int visited = 0; visited < slices_;) {
            int seg_begin = k;
            int length = 0;
            double delta = 0.0;
            while (true) {
                delta += 2.0 * spins_[index(k, q)] * slice_local_field(k, q);
                ++length;
                ++visited;
                bool cut = !bond[k];
                k = (k + 1) % slices_;
                if (cut) {
                    break;
                }
            }
            if (accept(w * delta, rng)) {
                for (int j = 0, kk = seg_begin; j < length; ++j, kk = (kk + 1) % slices_) {
                    spins_[index(kk, q)] = static_cast<std::int8_t>(-spins_[index(kk, q)]);
                }
            }
        }
    }
}

void PimcChain::collapse() {
    for (int q = 0; q < n_; ++q) {
        int total = 0;
        for (int k = 0; k < slices_; ++k) {
            total += spins_[index(k, q)];
        }
        std::int8_t value = total > 0 ? 1 : (total < 0 ? -1 : spins_[index(0, q)]);
        for (int k = 0; k < slices_; ++k) {
            spins_[index(k, q)] = value;
        }
    }
    frozen_ = true;
}

// All slices agree, so a worldline flip costs beta B dE, i.e. classical Metropolis.
void PimcChain::frozen_pass(double w, std::mt19937_64 &rng) {
    for (int q = 0; q < n_; ++q) {
        double delta = 2.0 * spins_[index(0, q)] * slice_local_field(0, q) * w * slices_;
        if (accept(delta, rng)) {
            for (int k = 0; k < slices_; ++k) {
                spins_[index(k, q)] = static_cast<std::int8_t>(-spins_[index(k, q)]);
            }
        }
    }
}

void PimcChain::sweep(double A, double B, double beta, std::mt19937_64 &rng) {
    const double K = trotter_coupling(A, beta, slices_);
    const double w = beta * B / slices_;
    if (K > kFreezeCoupling) {
        if (!frozen_) {
            collapse();
        }
        frozen_pass(w, rng);
        return;
    }
    frozen_ = false;
    metropolis_pass(K, w, rng);
    cluster_pass(K, w, rng);
}

model::Spins PimcChain::readout(Readout mode, std::mt19937_64 &rng) const {
    if (mode == Readout::RandomSlice) {
        int k = static_cast<int>(util::uniform01(rng) * slices_);
        return slice_spins(std::min(k, slices_ - 1));
    }
    model::Spins out(n_);
    for (int q = 0; q < n_; ++q) {
        int total = 0;
        for (int k = 0; k < slices_; ++k) {
            total += spins_[index(k, q)];
        }
        out[q] = total > 0 ? 1 : (total < 0 ? -1 : spins_[index(0, q)]);
    }
    return out;
}

model::RunResult pimc_anneal(const model::Instance &instance, const std::vector<model::ScheduleValue> &ramp,
                             const PimcParams &params, std::optional<double> ground_energy) {
    params.validate();
    if (ramp.empty()) {
        throw std::invalid_argument("pimc_anneal: empty ramp");
    }
    const double e_ground = ground_energy ? *ground_energy : model::reference_ground(instance).energy;
    const double beta = 1.0 / model::thermal_energy_ghz(params.temperature_mK);
    std::vector<std::uint8_t> success(params.replicas, 0);
    util::parallel_for(params.replicas, params.jobs, [&](std::size_t r) {
        auto rng = util::derived_stream(params.seed, r, kStreamTag);
        PimcChain chain(instance, params.trotter_slices);
        chain.randomize(rng);
        for (const auto &ab : ramp) {
            chain.sweep(ab.A, ab.B, beta, rng);
        }
        success[r] = model::is_ground(instance, chain.readout(params.readout, rng), e_ground) ? 1 : 0;
    });
    std::int64_t hits = 0;
    for (auto s : success) {
        hits += s;
    }
    model::RunResult result;
    result.engine = "pimc-qa";
    result.instance_hash = instance.hash();
    result.params = {{"trotter_slices", std::to_string(params.trotter_slices)},
                     {"temperature_mK", util::format_number(params.temperature_mK)},
                     {"sweeps", std::to_string(static_cast<long long>(ramp.size()))},
                     {"replicas", std::to_string(params.replicas)},
                     {"readout", to_string(params.readout)}};
    result.seed = params.seed;
    model::set_outcome(result, hits, params.replicas);
    return result;
}

model::RunResult pimcqa_run(const model::Instance &instance, const model::Schedule &schedule,
                            const PimcParams &params, std::optional<double> ground_energy) {
    params.validate();
    std::vector<model::ScheduleValue> ramp(params.sweeps);
    for (int k = 0; k < params.sweeps; ++k) {
        double s = params.sweeps == 1 ? 1.0 : static_cast<double>(k) / (params.sweeps - 1);
        ramp[k] = schedule.at(s);
    }
    return pimc_anneal(instance, ramp, params, ground_energy);
}

}  // namespace alab::pimc
