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

#include "alab/model/ground.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "alab/util/errors.hpp"

namespace alab::model {

namespace {
constexpr double kTieTolerance = 1e-9;
}

GroundState brute_force_ground(const Instance &instance) {
    const int n = instance.num_qubits();
    if (n > kBruteForceMaxQubits) {
        throw SizeLimitError("brute_force_ground: " + std::to_string(n) + " qubits exceeds the cap of " +
                             std::to_string(kBruteForceMaxQubits));
    }
    Spins spins(n, 1);
    std::vector<double> field(n);
    for (int q = 0; q < n; ++q) {
        field[q] = local_field(instance, spins, q);
    }
    double e = energy(instance, spins);
    GroundState best{spins, e, 1};
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        int q = std::countr_zero(k);
        double s_old = spins[q];
        e += 2.0 * s_old * field[q];
        spins[q] = static_cast<std::int8_t>(-spins[q]);
        for (const auto &nb : instance.neighbors(q)) {
            field[nb.qubit] -= 2.0 * nb.coupling * s_old;
        }
        if (e < best.energy - kTieTolerance) {
            best.spins = spins;
            best.energy = e;
            best.degeneracy = 1;
        } else if (std::abs(e - best.energy) <= kTieTolerance) {
            ++best.degeneracy;
        }
    }
    best.energy = energy(instance, best.spins);
    return best;
}

namespace {

// Greedy descent over single spins and half cells (the four qubits of one side of a
// unit cell), repeated until no move lowers the energy.
void polish(const Instance &instance, Spins &spins) {
    const int n = instance.num_qubits();
    bool improved = true;
    while (improved) {
        improved = false;
        for (int q = 0; q < n; ++q) {
            if (2.0 * spins[q] * local_field(instance, spins, q) < -kTieTolerance) {
                spins[q] = static_cast<std::int8_t>(-spins[q]);
                improved = true;
            }
        }
        if (n % kCellQubits != 0) {
            continue;
        }
        double current = energy(instance, spins);
        for (int base = 0; base < n; base += kCellHalf) {
            for (int k = 0; k < kCellHalf; ++k) {
                spins[base + k] = static_cast<std::int8_t>(-spins[base + k]);
            }
            double trial = energy(instance, spins);
            if (trial < current - kTieTolerance) {
                current = trial;
                improved = true;
            } else {
                for (int k = 0; k < kCellHalf; ++k) {
                    spins[base + k] = static_cast<std::int8_t>(-spins[base + k]);
                }
            }
        }
    }
}

}  // namespace

GroundState reference_ground(const Instance &instance) {
    const int n = instance.num_qubits();
    if (n <= kBruteForceMaxQubits) {
        return brute_force_ground(instance);
    }
    // Block q -> owning black cell.
    std::vector<int> block(n, -1);
    int n_blocks = 0;
    for (int q = 0; q < n; ++q) {
        const auto &l = instance.labels()[q];
        if (l.kind == ClusterKind::Black) {
            block[q] = l.index;
            n_blocks = std::max(n_blocks, l.index + 1);
        } else if (l.kind != ClusterKind::Grey) {
            throw SizeLimitError("reference_ground: instances above 24 qubits must be motif glasses");
        }
    }
    // A grey cell belongs to the black cell it is coupled to.
    for (bool changed = true; changed;) {
        changed = false;
        for (const auto &c : instance.couplings()) {
            if (block[c.i] >= 0 && block[c.j] < 0) {
                block[c.j] = block[c.i];
                changed = true;
            } else if (block[c.j] >= 0 && block[c.i] < 0) {
                block[c.i] = block[c.j];
                changed = true;
            }
        }
    }
    for (int q = 0; q < n; ++q) {
        if (block[q] < 0) {
            throw std::invalid_argument("reference_ground: grey qubit " + std::to_string(q) + " is not attached");
        }
    }
    if (n_blocks > 30) {
        throw SizeLimitError("reference_ground: more than 30 black cells");
    }
    // E(sigma) = const - sum_b f_b sigma_b - sum_{b<c} K_bc sigma_b sigma_c for rigid blocks.
    std::vector<double> block_field(n_blocks, 0.0);
    std::vector<std::vector<double>> block_coupling(n_blocks, std::vector<double>(n_blocks, 0.0));
    for (int q = 0; q < n; ++q) {
        block_field[block[q]] += instance.fields()[q];
    }
    for (const auto &c : instance.couplings()) {
        int a = block[c.i], b = block[c.j];
        if (a != b) {
            block_coupling[a][b] += c.value;
            block_coupling[b][a] += c.value;
        }
    }
    std::vector<int> sigma(n_blocks, 1);
    std::vector<double> local(n_blocks);
    double e = 0.0;
    for (int b = 0; b < n_blocks; ++b) {
        local[b] = block_field[b];
        for (int c = 0; c < n_blocks; ++c) {
            local[b] += block_coupling[b][c];
        }
        e -= block_field[b];
        for (int c = b + 1; c < n_blocks; ++c) {
            e -= block_coupling[b][c];
        }
    }
    double best_e = e;
    std::uint64_t best_k = 0, gray = 0;
    const std::uint64_t total = std::uint64_t{1} << n_blocks;
    for (std::uint64_t k = 1; k < total; ++k) {
        int b = std::countr_zero(k);
        gray ^= std::uint64_t{1} << b;
        e += 2.0 * sigma[b] * local[b];
        for (int c = 0; c < n_blocks; ++c) {
            local[c] -= 2.0 * block_coupling[c][b] * sigma[b];
        }
        sigma[b] = -sigma[b];
        if (e < best_e - kTieTolerance) {
            best_e = e;
            best_k = gray;
        }
    }
    Spins spins(n);
    for (int q = 0; q < n; ++q) {
        spins[q] = ((best_k >> block[q]) & 1) ? -1 : 1;
    }
    polish(instance, spins);
    return {spins, energy(instance, spins), 1};
}

bool is_ground(const Instance &instance, std::span<const std::int8_t> spins, double ground_energy) {
    return energy(instance, spins) <= ground_energy + kTieTolerance;
}

}  // namespace alab::model
