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
#include <random>

namespace alab::util {

/// Independent generator for one replica / sweep point. The stream depends only on
/// (seed, stream, tag), never on which worker consumes it.
std::mt19937_64 derived_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0);

/// splitmix64 finalizer; used to derive child seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Uniform double in [0, 1) from the top 53 bits. Same values on every standard library,
// unlike std::uniform_real_distribution.
inline double uniform01(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace alab::util
