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

#include "alab/harness/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "alab/util/csv.hpp"
#include "alab/util/rng.hpp"
#include "alab/util/stats.hpp"

namespace alab::harness {

namespace {

constexpr std::uint64_t kBootstrapTag = 0x626f6f74ULL;

struct Pooled {
    int n_q;
    std::int64_t successes;
    std::int64_t replicas;
};

util::LinearFit weighted_log_fit(const std::vector<Pooled> &pts, const std::vector<double> &succ) {
    std::vector<double> x, y, w;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double n = static_cast<double>(pts[i].replicas);
        double p = succ[i] / n;
        x.push_back(pts[i].n_q);
        y.push_back(std::log(p));
        w.push_back(n * p / std::max(1.0 - p, 0.5 / n));
    }
    return util::linear_fit(x, y, w);
}

}  // namespace

std::string ScalingFit::to_csv() const {
    util::CsvTable t;
    t.header = {"alpha", "alpha_err", "intercept", "r_squared", "resamples"};
    t.rows.push_back({util::format_number(alpha), util::format_number(alpha_err), util::format_number(intercept),
                      util::format_number(r_squared), std::to_string(resamples)});
    return util::to_csv(t);
}

ScalingFit fit_scaling(std::vector<ScalingPoint> points, int resamples, std::uint64_t seed) {
    if (resamples < 0) {
        throw std::invalid_argument("fit_scaling: resamples must be non-negative");
    }
    std::map<int, Pooled> pooled;
    for (const auto &p : points) {
        if (p.replicas <= 0 || p.successes < 0 || p.successes > p.replicas) {
            throw std::invalid_argument("fit_scaling: invalid counts at n_q=" + std::to_string(p.n_q));
        }
        auto &slot = pooled.try_emplace(p.n_q, Pooled{p.n_q, 0, 0}).first->second;
        slot.successes += p.successes;
        slot.replicas += p.replicas;
    }
    if (pooled.size() < 3) {
        throw std::invalid_argument("fit_scaling: need at least three distinct sizes");
    }
    std::vector<Pooled> pts;
    for (const auto &[n, p] : pooled) {
        if (p.successes == 0) {
            throw std::invalid_argument("fit_scaling: zero successes at n_q=" + std::to_string(n) +
                                        "; increase replicas");
        }
        pts.push_back(p);
    }

    std::vector<double> succ(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        succ[i] = static_cast<double>(pts[i].successes);
    }
    auto fit = weighted_log_fit(pts, succ);

    ScalingFit out;
    out.alpha = -fit.slope;
    out.intercept = fit.intercept;
    out.r_squared = fit.r_squared;
    out.resamples = resamples;
    for (const auto &p : pts) {
        auto ci = util::wilson_interval(p.successes, p.replicas);
        out.points.push_back(
            {p.n_q, static_cast<double>(p.successes) / static_cast<double>(p.replicas), ci.low, ci.high});
    }

    if (resamples > 1) {
        auto rng = util::derived_stream(seed, 0, kBootstrapTag);
        std::vector<double> alphas;
        alphas.reserve(resamples);
        for (int b = 0; b < resamples; ++b) {
            for (std::size_t i = 0; i < pts.size(); ++i) {
                double p = static_cast<double>(pts[i].successes) / static_cast<double>(pts[i].replicas);
                std::binomial_distribution<std::int64_t> draw(pts[i].replicas, p);
                auto k = draw(rng);
                succ[i] = k == 0 ? 0.5 : static_cast<double>(k);
            }
            alphas.push_back(-weighted_log_fit(pts, succ).slope);
        }
        double mean = std::accumulate(alphas.begin(), alphas.end(), 0.0) / resamples;
        double var = 0.0;
        for (double a : alphas) {
            var += (a - mean) * (a - mean);
        }
        out.alpha_err = std::sqrt(var / (resamples - 1));
    }
    return out;
}

std::vector<ScalingPoint> scaling_points_from_csv(const std::string &text) {
    auto table = util::parse_csv(text);
    std::vector<ScalingPoint> out;
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        out.push_back({static_cast<int>(table.number(i, "n_q")),
                       static_cast<std::int64_t>(table.number(i, "successes")),
                       static_cast<std::int64_t>(table.number(i, "replicas"))});
    }
    return out;
}

}  // namespace alab::harness
