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

namespace alab::openquantum {

/// Hybrid environment: low-frequency Gaussian noise (W, epsilon_p) plus an Ohmic bath (eta, tau_c).
/// Internally angular frequencies are in rad/ns and times in ns.
struct NoiseParams {
    double W_GHz = 0.40;  // W / 2 pi
    double eta = 0.24;
    double tau_c_s = 1e-12;
    double temperature_mK = 15.5;

    void validate() const;

    /// epsilon_p / h = hbar W^2 / (2 k_B T h), in GHz. Always derived from W and T.
    double epsilon_p_GHz() const;
    /// k_B T / h in GHz.
    double thermal_GHz() const;
    /// beta = hbar / k_B T in ns.
    double beta_ns() const;
    double W_angular() const;        // rad/ns
    double epsilon_angular() const;  // rad/ns
    double tau_c_ns() const {
        return tau_c_s * 1e9;
    }
};

/// Ohmic spectral density S(omega) / hbar^2 in 1/ns for angular frequency omega in rad/ns:
/// eta omega exp(-|omega| tau_c) / (1 - exp(-beta omega)), equal to eta / beta at omega = 0.
double spectral_density(const NoiseParams &params, double omega);

/// Thermal ground-state population of a two-level system with splitting omega10 (GHz).
double equilibrium_p0(double omega10_GHz, double temperature_mK);

}  // namespace alab::openquantum
