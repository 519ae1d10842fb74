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

#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"
#include "alab/spectrum/hamiltonian.hpp"
#include "alab/spectrum/krylov.hpp"
#include "alab/spectrum/profile.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/errors.hpp"
#include "support/oracles.hpp"

using namespace alab;
using namespace alab::spectrum;

namespace {

model::Instance random_instance(int n, double density, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<double> h(n);
    for (auto &x : h) x = u(rng);
    std::vector<model::Coupling> c;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (0.5 * (u(rng) + 1.0) < density) {
                c.push_back({i, j, u(rng)});
            }
        }
    }
    return model::Instance(h, c, std::vector<model::ClusterLabel>(n));
}

model::Instance single_qubit(double h) {
    return model::Instance({h}, {}, {model::ClusterLabel{}});
}

model::Instance mirrored(const model::Instance &inst) {
    std::vector<double> h(inst.fields().begin(), inst.fields().end());
    for (auto &x : h) x = -x;
    return model::Instance(h, {inst.couplings().begin(), inst.couplings().end()},
                           {inst.labels().begin(), inst.labels().end()});
}

}  // namespace

TEST(IsingOperator, MatchesDenseOracle) {
    auto inst = random_instance(6, 0.6, 11);
    const double A = 0.7, B = 1.3;
    auto H = oracle::dense_hamiltonian(inst, A, B);
    std::mt19937_64 rng(4);
    std::normal_distribution<double> g;
    std::vector<double> v(64);
    for (auto &x : v) x = g(rng);
    auto out = apply_hamiltonian(inst, A, B, v);
    Eigen::VectorXd ref = H * Eigen::Map<Eigen::VectorXd>(v.data(), 64);
    for (int i = 0; i < 64; ++i) {
        EXPECT_NEAR(out[i], ref(i), 1e-12);
    }
}

TEST(IsingOperator, UniformStateIsTransverseGround) {
    auto inst = model::build_probe(0.44);
    std::vector<double> v(std::size_t(1) << 16, 1.0);
    auto out = apply_hamiltonian(inst, 1.0, 0.0, v);
    for (std::size_t i = 0; i < v.size(); i += 997) {
        EXPECT_DOUBLE_EQ(out[i], -16.0);
    }
}

TEST(IsingOperator, SizeAndDimensionGuards) {
    EXPECT_THROW(IsingOperator(random_instance(25, 0.0, 1)), SizeLimitError);
    auto inst = random_instance(3, 0.5, 2);
    std::vector<double> wrong(7);
    EXPECT_THROW(apply_hamiltonian(inst, 1, 1, wrong), std::invalid_argument);
}

TEST(IsingOperator, SingleQubitSpectrum) {
    IsingOperator op(single_qubit(1.0));
    op.set_envelope(0.0, 1.0);
    auto eig = lowest_eigenpairs(op);
    EXPECT_NEAR(eig.energies[0], -1.0, 1e-12);
    EXPECT_NEAR(eig.energies[1], 1.0, 1e-12);
}

TEST(Krylov, SingleQubitGapOracle) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ua(0.0, 6.0), uh(-1.0, 1.0);
    for (int t = 0; t < 50; ++t) {
        double A = ua(rng), B = ua(rng), h = uh(rng);
        IsingOperator op(single_qubit(h));
        op.set_envelope(A, B);
        auto eig = lowest_eigenpairs(op);
        EXPECT_NEAR(eig.energies[1] - eig.energies[0], 2.0 * std::sqrt(A * A + B * B * h * h), 1e-10)
            << "A=" << A << " B=" << B << " h=" << h;
    }
}

TEST(Krylov, TenQubitSubInstanceMatchesDense) {
    auto inst = random_instance(10, 0.4, 5);
    for (double s : {0.1, 0.4, 0.7, 0.95}) {
        auto sv = model::Schedule::synthetic().at(s);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(oracle::dense_hamiltonian(inst, sv.A, sv.B));
        IsingOperator op(inst);
        op.set_envelope(sv.A, sv.B);
        KrylovOptions opts;
        opts.k = 4;
        auto eig = lowest_eigenpairs(op, opts);
        for (int i = 0; i < 4; ++i) {
            EXPECT_NEAR(eig.energies[i], es.eigenvalues()(i), 1e-8) << "s=" << s << " i=" << i;
            EXPECT_LE(eig.residuals[i], 1e-8 * eig.norm_bound);
        }
    }
}

TEST(Krylov, ResidualOrthogonalityAndPhase) {
    auto inst = model::build_probe(0.44);
    auto eig = lowest_eigenpairs(inst, 0.3, model::Schedule::synthetic());
    ASSERT_EQ(eig.vectors.size(), 2u);
    double dot = 0.0, n0 = 0.0;
    for (std::size_t i = 0; i < eig.vectors[0].size(); ++i) {
        dot += eig.vectors[0][i] * eig.vectors[1][i];
        n0 += eig.vectors[0][i] * eig.vectors[0][i];
    }
    EXPECT_LE(std::abs(dot), 1e-8);
    EXPECT_NEAR(n0, 1.0, 1e-10);
    for (int k = 0; k < 2; ++k) {
        EXPECT_LE(eig.residuals[k], 1e-8 * eig.norm_bound);
        const auto &v = eig.vectors[k];
        auto big = std::max_element(v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
        EXPECT_GT(*big, 0.0);
    }
}

TEST(Krylov, RejectsTooManyPairs) {
    IsingOperator op(random_instance(4, 0.5, 3));
    op.set_envelope(1, 1);
    KrylovOptions opts;
    opts.k = 7;
    EXPECT_THROW(lowest_eigenpairs(op, opts), std::invalid_argument);
}

TEST(Probe, TransverseGroundWithoutProblemTerm) {
    IsingOperator op(model::build_probe(0.44));
    const double A0 = model::Schedule::synthetic().at(0).A;
    op.set_envelope(A0, 0.0);
    auto eig = lowest_eigenpairs(op);
    EXPECT_NEAR(eig.energies[0], -16.0 * A0, 1e-9);
    const double amp = 1.0 / 256.0;
    for (std::size_t i = 0; i < eig.vectors[0].size(); i += 1021) {
        EXPECT_NEAR(eig.vectors[0][i], amp, 1e-8);
    }
}

TEST(Probe, StartOfShippedScheduleIsNearTransverseGround) {
    // B(0) > 0 on the shipped schedule, so the energy sits slightly below -16 A(0).
    auto sched = model::Schedule::synthetic();
    auto eig = lowest_eigenpairs(model::build_probe(0.44), 0.0, sched);
    EXPECT_LT(eig.energies[0], -16.0 * sched.at(0).A);
    EXPECT_GT(eig.energies[0], -16.0 * sched.at(0).A - 0.01 * 16.0 * sched.at(0).A);
}

TEST(Probe, EndpointEigenstructure) {
    auto sched = model::Schedule::synthetic();
    auto inst = model::build_probe(0.44);
    auto eig = lowest_eigenpairs(inst, 1.0, sched);
    auto row = two_level_row(1.0, eig, 16);
    double expected = 0.96 * sched.at(1.0).B;
    EXPECT_LE(std::abs(row.omega10 - expected) / expected, 1e-6);
    EXPECT_NEAR(row.hamming, 8.0, 1e-6);
    EXPECT_LE(row.a_elem, 1e-8);
    // Both states are computational basis states: global (all down) and false (left up).
    std::size_t global = 0xFFFF, false_min = 0xFF00;
    EXPECT_NEAR(std::abs(eig.vectors[0][global]), 1.0, 1e-8);
    EXPECT_NEAR(std::abs(eig.vectors[1][false_min]), 1.0, 1e-8);
}

TEST(Profile, PhaseInvariantElements) {
    auto inst = model::build_probe(0.44);
    auto eig = lowest_eigenpairs(inst, 0.3, model::Schedule::synthetic());
    auto row = two_level_row(0.3, eig, 16);
    for (auto &x : eig.vectors[1]) x = -x;
    auto flipped = two_level_row(0.3, eig, 16);
    EXPECT_DOUBLE_EQ(row.a_elem, flipped.a_elem);
    EXPECT_DOUBLE_EQ(row.hamming, flipped.hamming);
    EXPECT_GE(row.a_elem, 0.0);
    EXPECT_GE(row.hamming, 0.0);
    EXPECT_LE(row.hamming, 16.0);
}

TEST(Profile, GaugeCovariance) {
    auto inst = model::build_probe(0.44);
    auto sched = model::Schedule::synthetic();
    std::vector<double> grid{0.2, 0.3, 0.6};
    auto p = compute_profile(inst, sched, grid);
    auto m = compute_profile(mirrored(inst), sched, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(p.rows[i].omega10, m.rows[i].omega10, 1e-9);
        EXPECT_NEAR(p.rows[i].a_elem, m.rows[i].a_elem, 1e-8 * std::max(1.0, p.rows[i].a_elem));
        EXPECT_NEAR(p.rows[i].hamming, m.rows[i].hamming, 1e-8);
        for (int q = 0; q < 16; ++q) {
            EXPECT_NEAR(p.rows[i].polarization0[q], -m.rows[i].polarization0[q], 1e-8);
        }
    }
}

TEST(Profile, CsvSchemas) {
    auto inst = random_instance(4, 0.5, 8);
    std::vector<double> grid{0.0, 0.5, 1.0};
    auto p = compute_profile(inst, model::Schedule::synthetic(), grid);
    auto t = util::parse_csv(p.to_csv());
    EXPECT_EQ(t.header, (std::vector<std::string>{"s", "E0", "E1", "omega10", "a_elem", "hamming"}));
    EXPECT_EQ(t.rows.size(), 3u);
    auto pol = util::parse_csv(p.polarizations_csv());
    EXPECT_EQ(pol.header, (std::vector<std::string>{"s", "state", "z0", "z1", "z2", "z3"}));
    EXPECT_EQ(pol.rows.size(), 6u);
}

TEST(Profile, JobsDoNotChangeResults) {
    auto inst = random_instance(8, 0.5, 21);
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(i / 40.0);
    ProfileOptions one, four;
    one.chunk = four.chunk = 8;
    four.jobs = 4;
    auto sched = model::Schedule::synthetic();
    EXPECT_EQ(compute_profile(inst, sched, grid, one).to_csv(), compute_profile(inst, sched, grid, four).to_csv());
}

TEST(Profile, DegenerateFlag) {
    auto inst = model::Instance({0.0, 0.0}, {}, std::vector<model::ClusterLabel>(2));
    std::vector<double> grid{1.0};
    auto p = compute_profile(inst, model::Schedule::synthetic(), grid);
    EXPECT_TRUE(p.rows[0].degenerate);
    EXPECT_GE(p.rows[0].omega10, 0.0);
}

TEST(Profile, RefinedGridInsertsPoints) {
    std::vector<double> coarse{0.0, 0.1, 0.2, 0.3};
    auto fine = refined_grid(coarse, 0.15, 0.01, 4);
    EXPECT_EQ(fine.size(), 4u + 3u);
    EXPECT_TRUE(std::is_sorted(fine.begin(), fine.end()));
}

TEST(MinGap, SingleQubitAnalytic) {
    // A = 6(1-s), B = 0.3 + 5.7 s: minimise 36(1-s)^2 + (0.3 + 5.7 s)^2.
    const double s_star = (72.0 - 3.42) / (72.0 + 5.7 * 5.7 * 2.0);
    auto mg = min_gap(single_qubit(1.0), model::Schedule::synthetic());
    EXPECT_NEAR(mg.s_star, s_star, 1e-5);
    double A = 6 * (1 - s_star), B = 0.3 + 5.7 * s_star;
    EXPECT_NEAR(mg.omega_min, 2 * std::sqrt(A * A + B * B), 1e-9);
}
