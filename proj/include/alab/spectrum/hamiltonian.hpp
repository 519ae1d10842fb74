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

#include <cstddef>
#include <span>
#include <vector>

#include "alab/model/instance.hpp"

namespace alab::spectrum {

// Largest instance accepted for state-vector work (2^24 amplitudes).
inline constexpr int kMaxStateQubits = 24;

/// Spin of qubit q in computational basis state x: bit clear -> +1, bit set -> -1.
inline int basis_spin(std::size_t x, int q) {
    return ((x >> q) & 1U) ? -1 : 1;
}

/// Matrix-free H(s) = A H_D + B H_P with H_D = -sum_mu sigma^x_mu and H_P the Ising energy.
/// Amplitudes are real: the operator is real symmetric in the sigma^z basis.
class IsingOperator {
   public:
    /// Throws SizeLimitError above kMaxStateQubits.
    explicit IsingOperator(const model::Instance &instance);

    int num_qubits() const {
        return num_qubits_;
    }
    std::size_t dimension() const {
        return problem_energy_.size();
    }
    /// Dimensionless Ising energy of every basis state.
    std::span<const double> problem_energy() const {
        return problem_energy_;
    }

    void set_envelope(double A, double B);
    double A() const {
        return A_;
    }
    double B() const {
        return B_;
    }

    /// out = H v. Sizes must equal dimension().
    void apply(std::span<const double> v, std::span<double> out) const;

    /// Upper bound on the spectral norm: A n + B max|E_P|.
    double norm_bound() const;

   private:
    int num_qubits_;
    std::vector<double> problem_energy_;
    double max_abs_energy_ = 0.0;
    double A_ = 0.0;
    double B_ = 0.0;
};

/// (A H_D + B H_P) v without materialising the matrix.
std::vector<double> apply_hamiltonian(const model::Instance &instance, double A, double B, std::span<const double> v);

}  // namespace alab::spectrum
