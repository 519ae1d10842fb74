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

#include <filesystem>
#include <string>
#include <vector>

#include "alab/harness/config.hpp"

namespace alab::harness {

inline constexpr int kManifestSchemaVersion = 1;
inline constexpr const char *kLabVersion = "0.1.0";

struct OutputFile {
    std::string path;  // relative to out_dir
    std::string sha256;
};

struct PointFailure {
    std::string engine;
    std::string point;
    std::string error;
};

struct ExperimentSummary {
    std::vector<OutputFile> outputs;
    std::vector<PointFailure> failures;
    std::vector<std::string> advisories;
    bool partial = false;
    std::filesystem::path manifest;
};

/// Runs every engine over the experiment grid and writes one CSV per engine plus
/// manifest.json into config.out_dir. Per-point failures are recorded and the run continues.
ExperimentSummary run_experiment(const ExperimentConfig &config);

/// Seed handed to grid point `index` of `engine`.
std::uint64_t point_seed(std::uint64_t seed, Engine engine, std::size_t index);

}  // namespace alab::harness
