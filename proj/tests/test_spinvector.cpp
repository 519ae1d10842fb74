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
#include "alab/spinvector/potential.hpp"
#include "alab/spinvector/spin_vector.hpp"
#include "alab/spinvector/svmc.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/errors.hpp"

using namespace alab;
using namespace alab::spinvector;
using model::kPi;

namespace {

// One ferromagnetic 4x4 cell with uniform field -1; halves labelled Left and Right.
model::Instance convex_cell() {
    std::vector<double> h(8, -1.0);
    std::vector<model::Coupling> c;
    for (int i = 0; i < 4; ++i) {
        for (int j = 4; j < 8; ++j) {
            c.push_back({i, j, 1.0});
        }
    }
    std::vector<model::ClusterLabel> labels(8);
    for (int q = 4; q < 8; ++q) labels[q] = {model::ClusterKind::Right, 0};
    return model::Instance(h, c, labels);
}

double closed_form_potential(double A, double B, double hL, double hR, double tL, double tR) {
    double sl = std::sin(tL), sr = std::sin(tR);
    return -8 * A * (std::cos(tL) + std::cos(tR)) -
           B * (8 * hL * sl + 8 * hR * sr + 16 * sl * sl + 16 * sr * sr + 4 * sl * sr);
}

}  // namespace

TEST(SvEnergy, IsingReductionAtZeroTransverseField) {
    auto inst = model::build_probe(0.44);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> angles(16);
        model::Spins spins(16);
        for (int q = 0; q < 16; ++q) {
            spins[q] = (rng() & 1) ? 1 : -1;
            angles[q] = spins[q] * kPi / 2;
        }
        EXPECT_NEAR(sv_energy(inst, angles, 0.0, 2.5), 2.5 * model::energy(inst, spins), 1e-12);
        EXPECT_EQ(project_to_spins(angles), spins);
    }
}

TEST(SvEnergy, TransverseStateAndLengthCheck) {
    auto inst = model::build_probe(0.44);
    std::vector<double> zero(16, 0.0);
    EXPECT_DOUBLE_EQ(sv_energy(inst, zero, 1.7, 3.0), -1.7 * 16);
    std::vector<double> short_state(3, 0.0);
    EXPECT_THROW(sv_energy(inst, short_state, 1, 1), std::invalid_argument);
}

TEST(SvEnergy, SingleQubitSmallFieldAngle) {
    model::Instance q({0.3}, {}, {model::ClusterLabel{}});
    const double A = 5.0, B = 0.2;
    // Stationary point of -A cos - B h sin sits at tan(theta) = B h / A.
    double theta = std::atan(B * 0.3 / A);
    auto e = [&](double t) { return sv_energy(q, std::vector<double>{t}, A, B); };
    EXPECT_LT(e(theta), e(theta + 1e-3));
    EXPECT_LT(e(theta), e(theta - 1e-3));
    EXPECT_NEAR(std::sin(theta), 0.3 * B / A, 1e-5);
}

TEST(SvEnergy, ProjectionTieBreaksUp) {
    std::vector<double> angles{0.0, kPi, -0.1, 0.1};
    auto spins = project_to_spins(angles);
    EXPECT_EQ(spins[0], 1);
    EXPECT_EQ(spins[2], -1);
    EXPECT_EQ(spins[3], 1);
    EXPECT_NEAR(wrap_angle(3 * kPi / 2), -kPi / 2, 1e-12);
}

TEST(Svmc, ParameterValidation) {
    SVMCParams p;
    p.sweeps = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.temperature_mK = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
    p = {};
    p.replicas = 0;
    EXPECT_THROW(p.validate(), std::invalid_argument);
}

TEST(Svmc, LinearSweepRamp) {
    EXPECT_DOUBLE_EQ(sweep_s(0, 11), 0.0);
    EXPECT_DOUBLE_EQ(sweep_s(10, 11), 1.0);
    EXPECT_DOUBLE_EQ(sweep_s(5, 11), 0.5);
}

TEST(Svmc, ConvexInstanceAlwaysSucceeds) {
    auto inst = convex_cell();
    SVMCParams p;
    p.sweeps = 2000;
    p.replicas = 300;
    auto r = svmc_run(inst, model::Schedule::synthetic(), p);
    EXPECT_GE(r.success_probability(), 0.99);
    EXPECT_EQ(r.engine, "svmc");
}

TEST(Svmc, DeterministicAcrossWorkerCounts) {
    auto inst = model::build_probe(0.44);
    SVMCParams p;
    p.sweeps = 200;
    p.replicas = 64;
    p.seed = 99;
    auto a = svmc_run(inst, model::Schedule::synthetic(), p);
    p.jobs = 3;
    auto b = svmc_run(inst, model::Schedule::synthetic(), p);
    EXPECT_EQ(a.to_json(), b.to_json());
    p.seed = 100;
    auto c = svmc_run(inst, model::Schedule::synthetic(), p);
    EXPECT_EQ(c.seed, 100u);
}

TEST(Svmc, SingleQubitBoltzmannHistogram) {
    model::Instance q({0.5}, {}, {model::ClusterLabel{}});
    const double A = 0.3, B = 0.3, kT = model::thermal_energy_ghz(15.5);
    SvmcChain chain(q, kPi / 2);
    std::mt19937_64 rng(17);
    std::vector<double> samples;
    for (int i = 0; i < 200; ++i) chain.sweep(A, B, kT, rng);
    for (int i = 0; i < 200000; ++i) {
        chain.sweep(A, B, kT, rng);
        if (i % 10 == 0) samples.push_back(chain.angles()[0]);
    }
    std::sort(samples.begin(), samples.end());
    // Exact CDF of exp(-E/kT) on [-pi, pi] by trapezoid.
    const int grid = 20000;
    std::vector<double> cdf(grid + 1, 0.0);
    auto dens = [&](double t) { return std::exp(-sv_energy(q, std::vector<double>{t}, A, B) / kT); };
    for (int i = 1; i <= grid; ++i) {
        double t0 = -kPi + 2 * kPi * (i - 1) / grid, t1 = -kPi + 2 * kPi * i / grid;
        cdf[i] = cdf[i - 1] + 0.5 * (dens(t0) + dens(t1)) * (t1 - t0);
    }
    double ks = 0.0;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        double x = (samples[k] + kPi) / (2 * kPi) * grid;
        int i = std::clamp(static_cast<int>(x), 0, grid - 1);
        double f = (cdf[i] + (x - i) * (cdf[i + 1] - cdf[i])) / cdf[grid];
        ks = std::max(ks, std::abs(f - static_cast<double>(k + 1) / samples.size()));
    }
    EXPECT_LT(ks, 0.02);
}

TEST(Potential, MatchesClosedFormAndFullState) {
    auto inst = model::build_probe(0.44);
    auto sched = model::Schedule::synthetic();
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-kPi, kPi);
    for (int t = 0; t < 30; ++t) {
        double s = (t + 0.5) / 30.0, tl = u(rng), tr = u(rng);
        auto sv = sched.at(s);
        double v = effective_potential(inst, s, tl, tr, sched);
        EXPECT_NEAR(v, closed_form_potential(sv.A, sv.B, 0.44, -1.0, tl, tr), 1e-12);
        std::vector<double> angles(16, tl);
        std::fill(angles.begin() + 8, angles.end(), tr);
        EXPECT_NEAR(v, sv_energy(inst, angles, sv.A, sv.B), 1e-12);
    }
}

TEST(Potential, EndpointMinima) {
    auto inst = model::build_probe(0.44);
    auto sched = model::Schedule::synthetic();
    auto V = [&](double s, double a, double b) { return effective_potential(inst, s, a, b, sched); };
    const double d = 1e-3;
    for (double a : {-kPi / 2, kPi / 2}) {
        for (double b : {-kPi / 2, kPi / 2}) {
            double c = V(1.0, a, b);
            EXPECT_LT(c, V(1.0, a + d, b));
            EXPECT_LT(c, V(1.0, a - d, b));
            EXPECT_LT(c, V(1.0, a, b + d));
            EXPECT_LT(c, V(1.0, a, b - d));
        }
    }
    double c0 = V(0.0, 0.0, 0.0);
    for (int i = 0; i < 64; ++i) {
        double phi = 2 * kPi * i / 64;
        EXPECT_LT(c0, V(0.0, 0.3 * std::cos(phi), 0.3 * std::sin(phi)));
    }
}

TEST(Potential, RequiresClusterLabels) {
    auto inst = model::Instance({0.1, 0.2}, {}, {model::ClusterLabel{model::ClusterKind::Black, 0},
                                                 model::ClusterLabel{model::ClusterKind::Left, 0}});
    EXPECT_THROW(effective_potential(inst, 0.5, 0, 0, model::Schedule::synthetic()), std::invalid_argument);
}

TEST(Potential, ProbeTrapsInFalseMinimum) {
    auto sched = model::Schedule::synthetic();
    auto grid = uniform_grid(0.0, 1.0, 201);
    TraceOptions opts;
    opts.include_surface = false;
    for (double h : {0.40, 0.44, 0.46, 0.49}) {
        auto surf = trace_minima(model::build_probe(h), sched, grid, opts);
        ASSERT_TRUE(surf.bifurcation_s.has_value()) << h;
        ASSERT_TRUE(surf.crossover_s.has_value()) << h;
        EXPECT_LT(*surf.bifurcation_s, *surf.crossover_s);
        const auto &end = surf.path("initial").points.back();
        EXPECT_DOUBLE_EQ(end.s, 1.0);
        EXPECT_NEAR(end.theta_left, kPi / 2, 1e-3) << h;
        EXPECT_NEAR(end.theta_right, -kPi / 2, 1e-3) << h;
        for (const auto &path : surf.paths) {
            for (std::size_t i = 1; i < path.points.size(); ++i) {
                EXPECT_LE(std::abs(path.points[i].theta_left - path.points[i - 1].theta_left), opts.max_step);
            }
        }
    }
}

TEST(Potential, ConvexCellHasNoBifurcation) {
    auto grid = uniform_grid(0.0, 1.0, 101);
    auto surf = trace_minima(convex_cell(), model::Schedule::synthetic(), grid);
    EXPECT_FALSE(surf.bifurcation_s.has_value());
    EXPECT_FALSE(surf.crossover_s.has_value());
}

TEST(Potential, CoarseGridIsReported) {
    auto grid = uniform_grid(0.0, 1.0, 3);
    EXPECT_THROW(trace_minima(model::build_probe(0.44), model::Schedule::synthetic(), grid), GridResolutionError);
}

TEST(Potential, CsvSchemas) {
    auto grid = uniform_grid(0.0, 1.0, 51);
    auto surf = trace_minima(model::build_probe(0.44), model::Schedule::synthetic(), grid);
    auto t = util::parse_csv(surf.to_csv());
    EXPECT_EQ(t.header, (std::vector<std::string>{"s", "theta_L", "V"}));
    EXPECT_EQ(t.rows.size(), 51u * 181u);
    auto paths = util::parse_csv(surf.paths_csv());
    EXPECT_EQ(paths.header[0], "label");
}
