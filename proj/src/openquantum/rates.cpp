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

#include "alab/openquantum/rates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alab/openquantum/niba.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/parallel.hpp"

namespace alab::openquantum {

namespace {

constexpr double kThermalizedProduct = 10.0;
constexpr double kFrozenProduct = 0.1;

double crossing(double s0, double g0, double s1, double g1, double target) {
    if (g0 > 0 && g1 > 0) {
        double l0 = std::log(g0), l1 = std::log(g1), lt = std::log(target);
        if (l1 != l0) {
            return s0 + (s1 - s0) * (lt - l0) / (l1 - l0);
        }
    } else if (g1 != g0) {
        return s0 + (s1 - s0) * (target - g0) / (g1 - g0);
    }
    return 0.5 * (s0 + s1);
}

}  // namespace

std::string to_string(RateKind kind) {
    return kind == RateKind::GoldenRule ? "golden-rule" : "niba";
}

std::string to_string(Regime regime) {
    switch (regime) {
        case Regime::Thermalized:
            return "thermalized";
        case Regime::Slowdown:
            return "slowdown";
        case Regime::Frozen:
            return "frozen";
    }
    return "unknown";
}

Regime classify(double gamma_down, double t_qa_s) {
    double product = gamma_down * t_qa_s;
    if (product >= kThermalizedProduct) {
        return Regime::Thermalized;
    }
    if (product >= kFrozenProduct) {
        return Regime::Slowdown;
    }
    return Regime::Frozen;
}

RegimeMap classify_regimes(std::vector<RatePoint> rates, double t_qa_s) {
    if (!(t_qa_s > 0)) {
        throw std::invalid_argument("classify_regimes: t_qa must be positive");
    }
    RegimeMap map;
    for (auto &p : rates) {
        p.regime = classify(p.gamma_down, t_qa_s);
    }
    for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
        const auto &a = rates[i];
        const auto &b = rates[i + 1];
        for (double threshold : {kThermalizedProduct, kFrozenProduct}) {
            bool above_a = a.gamma_down * t_qa_s >= threshold;
            bool above_b = b.gamma_down * t_qa_s >= threshold;
            if (above_a != above_b) {
                map.boundaries.push_back(crossing(a.s, a.gamma_down, b.s, b.gamma_down, threshold / t_qa_s));
            }
        }
    }
    std::sort(map.boundaries.begin(), map.boundaries.end());
    map.points = std::move(rates);
    return map;
}

std::vector<RatePoint> compute_rates(const spectrum::GapProfile &profile, const NoiseParams &params, RateKind kind,
                                     double t_qa_s, int jobs) {
    params.validate();
    if (!(t_qa_s > 0)) {
        throw std::invalid_argument("compute_rates: t_qa must be positive");
    }
    std::vector<RatePoint> out(profile.rows.size());
    const double theta = params.thermal_GHz();
    util::parallel_for(profile.rows.size(), jobs, [&](std::size_t i) {
        const auto &row = profile.rows[i];
        RatePoint p;
        p.s = row.s;
        p.omega10 = row.omega10;
        p.gamma_down = kind == RateKind::GoldenRule ? golden_rule_rate(row.a_elem, row.omega10, params)
                                                    : niba_rate(row.omega10, row.hamming, row.a_elem, params);
        p.gamma_up = p.gamma_down * std::exp(-row.omega10 / theta);
        p.regime = classify(p.gamma_down, t_qa_s);
        out[i] = p;
    });
    return out;
}

std::string rates_csv(const std::vector<RatePoint> &rates) {
    util::CsvTable t;
    t.header = {"s", "gamma_down", "gamma_up", "regime"};
    for (const auto &p : rates) {
        t.rows.push_back({util::format_number(p.s), util::format_number(p.gamma_down),
                          util::format_number(p.gamma_up), to_string(p.regime)});
    }
    return util::to_csv(t);
}

}  // namespace alab::openquantum
