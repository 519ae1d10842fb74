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
#include <vector>

#include "alab/model/instance.hpp"
#include "alab/model/schedule.hpp"
#include "alab/spectrum/hamiltonian.hpp"

namespace alab::spectrum {

struct KrylovOptions {
    int k = 2;                         // eigenpairs wanted, at most 6
    int max_basis = 40;                // Krylov basis size per cycle
    int max_restarts = 2000;
    double tolerance = 1e-14;          // target estimated residual, relative to norm_bound
    double guaranteed_residual = 1e-8; // hard bound on the explicit residual, relative
    std::uint64_t seed = 0x4b72796cULL;
    // Start vectors, e.g. eigenvectors from a neighbouring s. May be empty.
    std::vector<std::vector<double>> warm_start;
};

struct EigenResult {
    std::vector<double> energies;              // ascending, GHz
    std::vector<std::vector<double>> vectors;  // unit norm, largest-magnitude amplitude positive
    std::vector<double> residuals;             // explicit ||H psi - E psi||
    double norm_bound = 0.0;
    int restarts = 0;
    int matvecs = 0;
};

/// Lowest eigenpairs by thick-restart Lanczos with full reorthogonalisation.
/// Throws ConvergenceError if the residual bound is not met within max_restarts.
EigenResult lowest_eigenpairs(const IsingOperator &op, const KrylovOptions &options = {});

EigenResult lowest_eigenpairs(const model::Instance &instance, double s, const model::Schedule &schedule, int k = 2);

/// Flips the sign so that the largest-magnitude amplitude is positive (lowest index on ties).
void fix_phase(std::vector<double> &v);

}  // namespace alab::spectrum
