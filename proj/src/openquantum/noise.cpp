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

#include "alab/openquantum/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "alab/model/constants.hpp"

namespace alab::openquantum {

using model::kPi;

void NoiseParams::validate() const {
    if (!(W_GHz > 0)) {
        throw std::invalid_argument("noise: W must be positive");
    }
    if (!(eta >= 0)) {
        throw std::invalid_argument("noise: eta must be non-negative");
    }
    if (!(tau_c_s > 0)) {
        throw std::invalid_argument("noise: tau_c must be positive");
    }
    if (!(temperature_mK > 0)) {
        throw std::invalid_argument("noise: temperature must be positive");
    }
}

double NoiseParams::thermal_GHz() const {
    return model::thermal_energy_ghz(temperature_mK);
}

double NoiseParams::epsilon_p_GHz() const {
    return W_GHz * W_GHz / (2.0 * thermal_GHz());
}

double NoiseParams::beta_ns() const {
    return 1.0 / (2.0 * kPi * thermal_GHz());
}

double NoiseParams::W_angular() const {
    return 2.0 * kPi * W_GHz;
}

double NoiseParams::epsilon_angular() const {
    return 2.0 * kPi * epsilon_p_GHz();
}

double spectral_density(const NoiseParams &params, double omega) {
    const double beta = params.beta_ns();
    const double x = beta * omega;
    if (std::abs(x) < 1e-8) {
        // omega / (1 - e^{-x}) = (1/beta) (1 + x/2 + ...)
        return params.eta / beta * (1.0 + 0.5 * x) * std::exp(-std::abs(omega) * params.tau_c_ns());
    }
    double value = params.eta * omega * std::exp(-std::abs(omega) * params.tau_c_ns()) / (-std::expm1(-x));
    return value > 0 ? value : 0.0;
}

double equilibrium_p0(double omega10_GHz, double temperature_mK) {
    return 1.0 / (1.0 + std::exp(-omega10_GHz / model::thermal_energy_ghz(temperature_mK)));
}

}  // namespace alab::openquantum
