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

#include <string>
#include <vector>

#include "alab/openquantum/noise.hpp"
#include "alab/spectrum/profile.hpp"

namespace alab::openquantum {

enum class RateKind { GoldenRule, NIBA };
enum class Regime { Thermalized, Slowdown, Frozen };

std::string to_string(RateKind kind);
std::string to_string(Regime regime);

struct RatePoint {
    double s = 0.0;
    double omega10 = 0.0;     // GHz
    double gamma_down = 0.0;  // 1/s
    double gamma_up = 0.0;    // 1/s
    Regime regime = Regime::Thermalized;
};

/// t_qa Gamma >= 10 thermalized, [0.1, 10) slowdown, < 0.1 frozen.
Regime classify(double gamma_down, double t_qa_s);

struct RegimeMap {
    std::vector<RatePoint> points;
    std::vector<double> boundaries;  // s where the regime changes, log-interpolated
};

RegimeMap classify_regimes(std::vector<RatePoint> rates, double t_qa_s);

/// Downward rate from the chosen theory; upward rate from detailed balance.
std::vector<RatePoint> compute_rates(const spectrum::GapProfile &profile, const NoiseParams &params, RateKind kind,
                                     double t_qa_s, int jobs = 1);

/// s,gamma_down,gamma_up,regime
std::string rates_csv(const std::vector<RatePoint> &rates);

}  // namespace alab::openquantum
