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

#include "alab/openquantum/noise.hpp"

namespace alab::openquantum {

/// Weak-coupling rate Gamma_{1->0} = a S(Omega10) / hbar^2, in 1/s.
double golden_rule_rate(double a_elem, double omega10_GHz, const NoiseParams &params);

/// The golden rule is trusted when the gap exceeds the low-frequency linewidth.
bool golden_rule_valid(double omega10_GHz, const NoiseParams &params);

struct NibaDiagnostics {
    double rate = 0.0;            // 1/s
    double integral_real = 0.0;   // ns
    double integral_imag = 0.0;   // ns
    double prefactor = 0.0;       // D in (rad/ns)^2
    double tau_max_ns = 0.0;
    int panels = 0;
    int refinements = 0;
};

/// Prefactor of the blip integral, a Omega^2 / h in (rad/ns)^2. Reduces the rate to the
/// golden rule at weak coupling.
double niba_prefactor(double omega10_GHz, double hamming, double a_elem);

/// Non-interacting-blip rate for a multiqubit transition with Hamming distance `hamming`,
/// in 1/s. Negative omega10 gives the reverse (absorption) rate.
/// Throws QuadratureError when the oscillatory integral cannot be resolved.
NibaDiagnostics niba_rate_diagnostics(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params);

double niba_rate(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params);

/// Closed form of niba_rate at eta = 0: a Gaussian line of width sqrt(h) W centred at h epsilon_p.
double niba_gaussian_rate(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params);

}  // namespace alab::openquantum
