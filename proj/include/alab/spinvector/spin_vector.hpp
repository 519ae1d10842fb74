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

#include <span>
#include <vector>

#include "alab/model/instance.hpp"

namespace alab::spinvector {

/// One angle per qubit, measured from the x axis in the xz plane:
/// <sigma^x> = cos(theta), <sigma^z> = sin(theta), theta in [-pi, pi].
using SpinVectorState = std::vector<double>;

/// Product-state energy in GHz:
/// -A sum cos(theta) - B (sum h sin(theta) + sum J sin(theta_i) sin(theta_j)).
double sv_energy(const model::Instance &instance, std::span<const double> angles, double A, double B);

/// Ising spins from angles: sign(sin theta), with sin theta == 0 mapped to +1.
model::Spins project_to_spins(std::span<const double> angles);

/// Maps an angle into [-pi, pi].
double wrap_angle(double theta);

}  // namespace alab::spinvector
