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

#include "alab/spinvector/spin_vector.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "alab/model/constants.hpp"

namespace alab::spinvector {

double sv_energy(const model::Instance &instance, std::span<const double> angles, double A, double B) {
    if (static_cast<int>(angles.size()) != instance.num_qubits()) {
        throw std::invalid_argument("sv_energy: state has " + std::to_string(angles.size()) + " angles, instance has " +
                                    std::to_string(instance.num_qubits()) + " qubits");
    }
    double transverse = 0.0, ising = 0.0;
    auto h = instance.fields();
    for (std::size_t q = 0; q < angles.size(); ++q) {
        transverse += std::cos(angles[q]);
        ising += h[q] * std::sin(angles[q]);
    }
    for (const auto &c : instance.couplings()) {
        ising += c.value * std::sin(angles[c.i]) * std::sin(angles[c.j]);
    }
    return -A * transverse - B * ising;
}

model::Spins project_to_spins(std::span<const double> angles) {
    model::Spins spins(angles.size());
    for (std::size_t q = 0; q < angles.size(); ++q) {
        spins[q] = std::sin(angles[q]) < 0.0 ? -1 : 1;
    }
    return spins;
}

double wrap_angle(double theta) {
    constexpr double two_pi = 2.0 * model::kPi;
    if (theta > model::kPi || theta < -model::kPi) {
        theta = std::remainder(theta, two_pi);
    }
    return theta;
}

}  // namespace alab::spinvector
