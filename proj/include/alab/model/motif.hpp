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

#include <cstdint>

#include "alab/model/instance.hpp"

namespace alab::model {

/// Motif glass: a grid of strong-field ("black") cells with weak-field ("grey") cells
/// attached on the boundary. rows/cols of 0 select a near-square grid.
struct MotifSpec {
    int n_black_cells = 1;
    int n_grey_cells = 1;
    int rows = 0;
    int cols = 0;
    double h_weak = 0.44;
    double h_strong = -1.0;
    std::uint64_t glass_seed = 7;

    int num_qubits() const {
        return kCellQubits * (n_black_cells + n_grey_cells);
    }

    /// Even split of n_qubits / 8 cells, black cells taking the odd one.
    static MotifSpec for_size(int n_qubits, std::uint64_t glass_seed);
};

Instance generate_motif_glass(const MotifSpec &spec);

}  // namespace alab::model
