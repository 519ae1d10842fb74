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

#include <algorithm>
#include <cmath>
#include <memory>

#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"
#include "alab/openquantum/populations.hpp"
#include "alab/openquantum/rates.hpp"
#include "alab/pimc/pimc.hpp"
#include "alab/spectrum/profile.hpp"

using namespace alab;
using namespace alab::openquantum;

namespace {

constexpr double kTqa = 20e-6;

double interp_log(const std::vector<RatePoint> &r, double s) {
    auto it = std::lower_bound(r.begin(), r.end(), s, [](const RatePoint &p, double x) { return p.s < x; });
    if (it == r.begin()) return it->gamma_down;
    auto lo = it - 1;
    double t = (s - lo->s) / (it->s - lo->s);
    return std::exp((1 - t) * std::log(lo->gamma_down) + t * std::log(it->gamma_down));
}

double interp_omega(const spectrum::GapProfile &p, double s) {
    auto it = std::lower_bound(p.rows.begin(), p.rows.end(), s,
                               [](const spectrum::GapRow &r, double x) { return r.s < x; });
    if (it == p.rows.begin()) return it->omega10;
    auto lo = it - 1;
    double t = (s - lo->s) / (it->s - lo->s);
    return (1 - t) * lo->omega10 + t * it->omega10;
}

}  // namespace

class ProbeProfile : public ::testing::Test {
   protected:
    static void SetUpTestSuite() {
        auto inst = model::build_probe(0.44);
        auto sched = model::Schedule::synthetic();
        base_ = std::make_unique<spectrum::GapProfile>(spectrum::compute_profile(inst, sched));
        std::vector<double> mids;
        for (std::size_t i = 0; i + 1 < base_->rows.size(); ++i) {
            mids.push_back(0.5 * (base_->rows[i].s + base_->rows[i + 1].s));
        }
        auto extra = spectrum::compute_profile(inst, sched, mids);
        dense_ = std::make_unique<spectrum::GapProfile>();
        dense_->num_qubits = base_->num_qubits;
        std::merge(base_->rows.begin(), base_->rows.end(), extra.rows.begin(), extra.rows.end(),
                   std::back_inserter(dense_->rows),
                   [](const spectrum::GapRow &a, const spectrum::GapRow &b) { return a.s < b.s; });
    }

    static void TearDownTestSuite() {
        base_.reset();
        dense_.reset();
    }

    static const spectrum::GapRow &min_row() {
        return *std::min_element(base_->rows.begin(), base_->rows.end(),
                                 [](const auto &a, const auto &b) { return a.omega10 < b.omega10; });
    }

    static std::unique_ptr<spectrum::GapProfile> base_;
    static std::unique_ptr<spectrum::GapProfile> dense_;
};

std::unique_ptr<spectrum::GapProfile> ProbeProfile::base_;
std::unique_ptr<spectrum::GapProfile> ProbeProfile::dense_;

TEST_F(ProbeProfile, InvariantsHoldOnEveryRow) {
    for (const auto &r : base_->rows) {
        EXPECT_GE(r.omega10, 0.0);
        EXPECT_GE(r.a_elem, 0.0);
        EXPECT_GE(r.hamming, 0.0);
        EXPECT_LE(r.hamming, 16.0);
        EXPECT_FALSE(r.degenerate);
    }
    EXPECT_TRUE(std::is_sorted(base_->rows.begin(), base_->rows.end(),
                               [](const auto &a, const auto &b) { return a.s < b.s; }));
}

TEST_F(ProbeProfile, HammingGrowsAfterMinimumGap) {
    const double s_star = min_row().s;
    double prev = -1.0;
    for (const auto &r : base_->rows) {
        if (r.s < s_star) continue;
        EXPECT_GE(r.hamming, prev - 1e-6) << "s=" << r.s;
        prev = std::max(prev, r.hamming);
    }
    EXPECT_NEAR(base_->rows.back().hamming, 8.0, 1e-6);
}

TEST_F(ProbeProfile, GoldenRuleRateDropsThreeDecades) {
    auto rates = compute_rates(*base_, NoiseParams{}, RateKind::GoldenRule, kTqa);
    double at_min = interp_log(rates, min_row().s);
    double at_end = interp_log(rates, 0.9);
    EXPECT_GE(at_min / at_end, 1e3);
}

TEST_F(ProbeProfile, DetailedBalanceOnRates) {
    for (auto kind : {RateKind::GoldenRule, RateKind::NIBA}) {
        NoiseParams p;
        p.temperature_mK = 25;
        for (const auto &r : compute_rates(*base_, p, kind, kTqa)) {
            double expected = r.gamma_down * std::exp(-r.omega10 / p.thermal_GHz());
            EXPECT_NEAR(r.gamma_up, expected, 1e-6 * expected + 1e-300);
        }
    }
}

TEST_F(ProbeProfile, SuccessInvariantUnderGridDoubling) {
    for (auto kind : {RateKind::GoldenRule, RateKind::NIBA}) {
        for (double T : {15.5, 35.0}) {
            NoiseParams p;
            p.temperature_mK = T;
            double coarse = evolve_populations(*base_, p, kTqa, kind).success_probability();
            double fine = evolve_populations(*dense_, p, kTqa, kind).success_probability();
            EXPECT_LE(std::abs(fine - coarse) / fine, 0.005) << to_string(kind) << " T=" << T;
        }
    }
}

TEST_F(ProbeProfile, ThermalReductionOfSuccess) {
    for (auto kind : {RateKind::GoldenRule, RateKind::NIBA}) {
        NoiseParams cold, hot;
        hot.temperature_mK = 35;
        double pc = evolve_populations(*base_, cold, kTqa, kind).success_probability();
        double ph = evolve_populations(*base_, hot, kTqa, kind).success_probability();
        EXPECT_GT(pc, ph) << to_string(kind);
    }
}

TEST_F(ProbeProfile, TemperatureSensitivityDecomposition) {
    // Compared through the excited-state population 1 - p0_eq, the quantity the success deficit tracks.
    for (auto kind : {RateKind::GoldenRule, RateKind::NIBA}) {
        NoiseParams cold, hot;
        hot.temperature_mK = 35;
        auto rc = compute_rates(*base_, cold, kind, kTqa);
        auto rh = compute_rates(*base_, hot, kind, kTqa);
        auto regimes = classify_regimes(rc, kTqa);
        ASSERT_FALSE(regimes.boundaries.empty());
        double s_b = regimes.boundaries.front();
        double omega = interp_omega(*base_, s_b);
        double g_rel = std::abs(interp_log(rh, s_b) / interp_log(rc, s_b) - 1.0);
        double p1c = 1.0 - equilibrium_p0(omega, 15.5);
        double p1h = 1.0 - equilibrium_p0(omega, 35.0);
        double p_rel = std::abs(p1h / p1c - 1.0);
        EXPECT_GT(p_rel, g_rel) << to_string(kind) << " s_b=" << s_b;
    }
}

TEST_F(ProbeProfile, PimcBelowQuantumModelAtLowestTemperature) {
    double me = evolve_populations(*base_, NoiseParams{}, kTqa, RateKind::NIBA).success_probability();
    pimc::PimcParams p;
    p.replicas = 200;
    p.seed = 3;
    auto r = pimc::pimcqa_run(model::build_probe(0.44), model::Schedule::synthetic(), p);
    EXPECT_LT(r.ci_high, me);
}
