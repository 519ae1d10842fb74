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

#include "alab/model/instance.hpp"

namespace alab::model {

struct GroundState {
    Spins spins;
    double energy;
    std::uint64_t degeneracy;
};

inline constexpr int kBruteForceMaxQubits = 24;

/// Exhaustive scan over 2^n configurations (Gray-code order). n <= 24.
GroundState brute_force_ground(const Instance &instance);

/// Reference minimum used to score annealing runs. Exhaustive up to 24 qubits; above
/// that, cells of a motif glass are treated as rigid blocks (each grey cell moves with
/// the black cell it hangs from) and all 2^blocks block configurations are enumerated,
/// then polished by single-spin and half-cell descent.
GroundState reference_ground(const Instance &instance);

/// True when `spins` reaches the reference energy within 1e-9.
bool is_ground(const Instance &instance, std::span<const std::int8_t> spins, double ground_energy);

}  // namespace alab::model
