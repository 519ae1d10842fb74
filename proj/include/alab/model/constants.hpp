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

namespace alab::model {

/// Boltzmann constant over Planck constant, GHz per kelvin. Energies throughout the
/// library are expressed as E/h in GHz.
inline constexpr double kBoltzmannOverPlanckGHzPerK = 20.836619;

inline constexpr double kPi = 3.14159265358979323846;

/// k_B T / h in GHz for a temperature in millikelvin.
constexpr double thermal_energy_ghz(double temperature_mK) {
    return kBoltzmannOverPlanckGHzPerK * temperature_mK * 1e-3;
}

}  // namespace alab::model
