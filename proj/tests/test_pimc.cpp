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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "alab/model/constants.hpp"
#include "alab/model/ground.hpp"
#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"
#include "alab/pimc/pimc.hpp"
#include "alab/util/rng.hpp"
#include "alab/util/stats.hpp"
#include "support/oracles.hpp"

using namespace alab;
using namespace alab::pimc;

namespace {

model::Instance two_qubits() {
    return model::Instance({0.3, -0.2}, {{0, 1, 0.5}}, std::vector<model::ClusterLabel>(2));
}

model::Instance small_glass() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> h(8);
    for (auto &x : h) x = 0.3 * u(rng);
    std::vector<model::Coupling> c;
    for (int i = 0; i < 8; ++i) {
        c.push_back({i, (i + 1) % 8, u(rng)});
        if (i < 4) c.push_back({i, i + 4, u(rng)});
    }
    return model::Instance(h, c, std::vector<model::ClusterLabel>(8));
}

// Metropolis simulated annealing on B(s) E at fixed temperature, written independently of the engine.
std::int64_t classical_sa(const model::Instance &inst, const std::vector<double> &B, double beta, int replicas,
                          double ground, std::uint64_t seed) {
    std::int64_t ok = 0;
    const int n = inst.num_qubits();
    for (int r = 0; r < replicas; ++r) {
        std::mt19937_64 rng(seed + 7919 * r);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        model::Spins s(n);
        for (auto &x : s) x = (rng() & 1) ? 1 : -1;
        for (double b : B) {
            for (int q = 0; q < n; ++q) {
                double dE = 2.0 * s[q] * model::local_field(inst, s, q) * b;
                if (dE <= 0 || u(rng) < std::exp(-beta * dE)) s[q] = static_cast<std::int8_t>(-s[q]);
            }
        }
        ok += std::abs(model::energy(inst, s) - ground) < 1e-9;
    }
    return ok;
}

}  // namespace

TEST(Pimc, ReadoutNames) {
    EXPECT_EQ(parse_readout(to_string(Readout::RandomSlice)), Readout::RandomSlice);
    EXPECT_EQ(parse_readout(to_string(Readout::MajorityVote)), Readout::MajorityVote);
    EXPECT_THROW(parse_readout("median"), std::invalid_argument);
}

TEST(Pimc, ParameterValidation) {
    PimcParams p;
    p.trotter_slices = 1;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.temperature_mK = -1;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Pimc, TrotterCoupling) {
    EXPECT_NEAR(trotter_coupling(1.0, 2.0, 8), 0.5 * std::log(1.0 / std::tanh(0.25)), 1e-14);
    EXPECT_TRUE(std::isinf(trotter_coupling(0.0, 2.0, 8)));
}

TEST(Pimc, DeltaActionMatchesActionDifferenceOnTwoSlices) {
    auto inst = two_qubits();
    PimcChain chain(inst, 2);
    const double K = 0.7, w = 0.4;
    for (int cfg = 0; cfg < 16; ++cfg) {
        for (int b = 0; b < 4; ++b) {
            chain.set_spin(b / 2, b % 2, (cfg >> b) & 1 ? -1 : 1);
        }
        for (int k = 0; k < 2; ++k) {
            for (int q = 0; q < 2; ++q) {
                double before = chain.action(K, w);
                double delta = chain.delta_action(k, q, K, w);
                auto s = chain.spin(k, q);
                chain.set_spin(k, q, static_cast<std::int8_t>(-s));
                double after = chain.action(K, w);
                chain.set_spin(k, q, s);
                EXPECT_NEAR(delta, after - before, 1e-12);
                // Metropolis ratio between the pair equals the Boltzmann ratio of the action.
                double forward = std::min(1.0, std::exp(-delta));
                double backward = std::min(1.0, std::exp(delta));
                EXPECT_NEAR(std::exp(-before) * forward, std::exp(-after) * backward,
                            1e-12 * std::exp(-std::min(before, after)));
            }
        }
    }
}

TEST(Pimc, ActionOfHandBuiltConfiguration) {
    auto inst = two_qubits();
    PimcChain chain(inst, 2);
    chain.set_spin(0, 0, 1);
    chain.set_spin(0, 1, 1);
    chain.set_spin(1, 0, -1);
    chain.set_spin(1, 1, 1);
    // Bonds: qubit 0 disagrees twice, qubit 1 agrees twice (periodic pair counted both ways).
    double bonds = -2 + 2;
    double e = model::energy(inst, model::Spins{1, 1}) + model::energy(inst, model::Spins{-1, 1});
    EXPECT_NEAR(chain.action(0.8, 0.3), -0.8 * bonds + 0.3 * e, 1e-14);
}

TEST(Pimc, TrotterOracleConvergesMonotonically) {
    auto inst = two_qubits();
    const double A = 0.3, B = 0.5, beta = 1.0 / model::thermal_energy_ghz(15.5);
    auto exact = oracle::thermal_diagonal(inst, A, B, beta);
    double prev = 1.0;
    for (int M : {8, 16, 32, 64}) {
        double tv = oracle::total_variation(oracle::trotter_slice_distribution(inst, A, B, beta, M), exact);
        EXPECT_LT(tv, prev) << "M=" << M;
        prev = tv;
    }
    EXPECT_LT(prev, 0.005);
}

TEST(Pimc, TwoQubitEquilibriumMatchesDenseOracle) {
    auto inst = two_qubits();
    const double A = 0.3, B = 0.5, beta = 1.0 / model::thermal_energy_ghz(15.5);
    auto exact = oracle::thermal_diagonal(inst, A, B, beta);
    PimcChain chain(inst, 64);
    auto rng = util::derived_stream(5, 0);
    chain.randomize(rng);
    for (int i = 0; i < 2000; ++i) chain.sweep(A, B, beta, rng);
    std::vector<double> hist(4, 0.0);
    double total = 0;
    for (int i = 0; i < 40000; ++i) {
        chain.sweep(A, B, beta, rng);
        for (int k = 0; k < 64; k += 16) {
            hist[oracle::basis_index(chain.slice_spins(k))] += 1;
            total += 1;
        }
    }
    for (auto &h : hist) h /= total;
    EXPECT_LE(oracle::total_variation(hist, exact), 0.02);
}

TEST(Pimc, ZeroTransverseFieldMatchesClassicalAnnealing) {
    auto inst = small_glass();
    const double ground = model::brute_force_ground(inst).energy;
    const double beta = 1.0 / model::thermal_energy_ghz(15.5);
    const int sweeps = 30, replicas = 3000;
    std::vector<model::ScheduleValue> ramp;
    std::vector<double> B;
    for (int k = 0; k < sweeps; ++k) {
        double b = 0.05 + 0.25 * k / (sweeps - 1);
        ramp.push_back({0.0, b});
        B.push_back(b);
    }
    PimcParams p;
    p.trotter_slices = 8;
    p.replicas = replicas;
    p.seed = 21;
    auto r = pimc_anneal(inst, ramp, p, ground);
    auto oracle = classical_sa(inst, B, beta, replicas, ground, 77);
    auto ci = util::wilson_interval(oracle, replicas);
    EXPECT_GT(r.success_probability(), 0.05);
    EXPECT_LT(r.success_probability(), 0.95);
    EXPECT_TRUE(r.ci_low <= ci.high && ci.low <= r.ci_high)
        << "pimc " << r.success_probability() << " vs classical " << static_cast<double>(oracle) / replicas;
}

TEST(Pimc, ReadoutModes) {
    auto inst = two_qubits();
    PimcChain chain(inst, 5);
    for (int k = 0; k < 5; ++k) {
        chain.set_spin(k, 0, k < 3 ? 1 : -1);
        chain.set_spin(k, 1, -1);
    }
    std::mt19937_64 rng(1);
    EXPECT_EQ(chain.readout(Readout::MajorityVote, rng), (model::Spins{1, -1}));
    for (int i = 0; i < 20; ++i) {
        auto s = chain.readout(Readout::RandomSlice, rng);
        EXPECT_EQ(s[1], -1);
    }
}

TEST(Pimc, DeterministicAcrossWorkerCounts) {
    auto inst = model::build_probe(0.44);
    PimcParams p;
    p.trotter_slices = 16;
    p.sweeps = 100;
    p.replicas = 24;
    p.seed = 5;
    auto sched = model::Schedule::synthetic();
    auto a = pimcqa_run(inst, sched, p);
    p.jobs = 4;
    auto b = pimcqa_run(inst, sched, p);
    EXPECT_EQ(a.to_json(), b.to_json());
    EXPECT_EQ(a.engine, "pimc-qa");
}
