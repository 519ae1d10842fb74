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

#include "alab/openquantum/populations.hpp"

#include <cmath>
#include <stdexcept>

#include "alab/model/constants.hpp"
#include "alab/util/csv.hpp"

namespace alab::openquantum {

namespace {

double interpolate_rate(double g0, double g1, double t) {
    if (g0 > 0 && g1 > 0) {
        return std::exp((1 - t) * std::log(g0) + t * std::log(g1));
    }
    return (1 - t) * g0 + t * g1;
}

}  // namespace

std::string PopulationTrace::to_csv() const {
    util::CsvTable t;
    t.header = {"s", "p0", "p1", "p0_eq"};
    for (const auto &r : rows) {
        t.rows.push_back({util::format_number(r.s), util::format_number(r.p0), util::format_number(r.p1),
                          util::format_number(r.p0_eq)});
    }
    return util::to_csv(t);
}

PopulationTrace evolve_populations(const std::vector<RatePoint> &rates, double temperature_mK, double t_qa_s,
                                   int substeps) {
    if (rates.empty()) {
        throw std::invalid_argument("evolve_populations: no rate points");
    }
    if (!(t_qa_s > 0) || !(temperature_mK > 0) || substeps < 1) {
        throw std::invalid_argument("evolve_populations: t_qa, temperature and substeps must be positive");
    }
    for (std::size_t i = 0; i < rates.size(); ++i) {
        if (rates[i].gamma_down < 0 || rates[i].gamma_up < 0 || !std::isfinite(rates[i].gamma_down)) {
            throw std::invalid_argument("evolve_populations: negative or non-finite rate at s=" +
                                        std::to_string(rates[i].s));
        }
        if (i > 0 && !(rates[i].s > rates[i - 1].s)) {
            throw std::invalid_argument("evolve_populations: s must be strictly increasing");
        }
    }
    const double theta = model::thermal_energy_ghz(temperature_mK);
    PopulationTrace trace;
    double p0_eq = equilibrium_p0(rates.front().omega10, temperature_mK);
    double p1 = 1.0 - p0_eq;
    trace.rows.push_back({rates.front().s, 1.0 - p1, p1, p0_eq});
    for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
        const auto &a = rates[i];
        const auto &b = rates[i + 1];
        const double dt = (b.s - a.s) * t_qa_s / substeps;
        for (int k = 0; k < substeps; ++k) {
            double t = (k + 0.5) / substeps;
            double down = interpolate_rate(a.gamma_down, b.gamma_down, t);
            double omega = (1 - t) * a.omega10 + t * b.omega10;
            double up = down * std::exp(-omega / theta);
            double total = down + up;
            if (total > 0) {
                double p1_eq = up / total;
                p1 = p1_eq + (p1 - p1_eq) * std::exp(-total * dt);
            }
        }
        trace.rows.push_back({b.s, 1.0 - p1, p1, equilibrium_p0(b.omega10, temperature_mK)});
    }
    return trace;
}

PopulationTrace evolve_populations(const spectrum::GapProfile &profile, const NoiseParams &params, double t_qa_s,
                                   RateKind kind, int jobs) {
    if (profile.rows.empty() || profile.rows.front().s > 1e-9 || profile.rows.back().s < 1.0 - 1e-9) {
        throw std::invalid_argument("evolve_populations: profile does not cover s in [0, 1]");
    }
    auto rates = compute_rates(profile, params, kind, t_qa_s, jobs);
    return evolve_populations(rates, params.temperature_mK, t_qa_s);
}

}  // namespace alab::openquantum
