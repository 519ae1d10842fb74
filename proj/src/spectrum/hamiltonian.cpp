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

#include "alab/spectrum/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "alab/util/errors.hpp"

namespace alab::spectrum {

IsingOperator::IsingOperator(const model::Instance &instance) : num_qubits_(instance.num_qubits()) {
    if (num_qubits_ > kMaxStateQubits) {
        throw SizeLimitError("state vector for " + std::to_string(num_qubits_) + " qubits exceeds the " +
                             std::to_string(kMaxStateQubits) + "-qubit limit");
    }
    const std::size_t dim = std::size_t{1} << num_qubits_;
    problem_energy_.assign(dim, 0.0);
    const auto h = instance.fields();
    const auto J = instance.couplings();
    for (std::size_t x = 0; x < dim; ++x) {
        double e = 0.0;
        for (int q = 0; q < num_qubits_; ++q) {
            e -= h[q] * basis_spin(x, q);
        }
        for (const auto &c : J) {
            e -= c.value * basis_spin(x, c.i) * basis_spin(x, c.j);
        }
        problem_energy_[x] = e;
        max_abs_energy_ = std::max(max_abs_energy_, std::abs(e));
    }
}

void IsingOperator::set_envelope(double A, double B) {
    A_ = A;
    B_ = B;
}

void IsingOperator::apply(std::span<const double> v, std::span<double> out) const {
    const std::size_t dim = dimension();
    if (v.size() != dim || out.size() != dim) {
        throw std::invalid_argument("IsingOperator::apply: dimension mismatch");
    }
    for (std::size_t x = 0; x < dim; ++x) {
        double flip = 0.0;
        for (int q = 0; q < num_qubits_; ++q) {
            flip += v[x ^ (std::size_t{1} << q)];
        }
        out[x] = B_ * problem_energy_[x] * v[x] - A_ * flip;
    }
}

double IsingOperator::norm_bound() const {
    return std::abs(A_) * num_qubits_ + std::abs(B_) * max_abs_energy_;
}

std::vector<double> apply_hamiltonian(const model::Instance &instance, double A, double B,
                                      std::span<const double> v) {
    IsingOperator op(instance);
    op.set_envelope(A, B);
    std::vector<double> out(op.dimension());
    op.apply(v, out);
    return out;
}

}  // namespace alab::spectrum
