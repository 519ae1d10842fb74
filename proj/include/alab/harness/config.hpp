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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "alab/model/motif.hpp"
#include "alab/model/schedule.hpp"
#include "alab/openquantum/noise.hpp"
#include "alab/pimc/pimc.hpp"
#include "alab/spinvector/svmc.hpp"

namespace alab::harness {

enum class Experiment { PvsHL, PvsT, Scaling, Profile, Potential };
enum class Engine { SVMC, PIMC, GoldenRule, NIBA };

std::string to_string(Experiment experiment);
std::string to_string(Engine engine);
Experiment parse_experiment(const std::string &text);
Engine parse_engine(const std::string &text);

class ConfigError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
    Experiment experiment = Experiment::PvsT;
    std::vector<Engine> engines;
    std::uint64_t seed = 1;
    int replicas = 1000;
    double t_qa_us = 20.0;
    std::filesystem::path out_dir = "results";
    std::string schedule = "synthetic";  // or a CSV path, relative to the config file
    int jobs = 1;
    int resamples = 2000;

    std::vector<double> h_L{0.44};
    std::vector<double> temperatures_mK{15.5};
    std::vector<int> motif_sizes{16, 40, 80, 120, 160, 200};

    spinvector::SVMCParams svmc;
    pimc::PimcParams pimc;
    openquantum::NoiseParams noise;
    model::MotifSpec motif;

    std::filesystem::path base_dir = ".";

    /// Throws ConfigError on unknown keys, empty grids, unsupported engines or bad values.
    void validate() const;
    model::Schedule load_schedule() const;

    /// Canonical JSON with every resolved setting; its sha256 is the config hash.
    std::string canonical_json() const;
    std::string hash() const;

    /// Parses and validates; throws ConfigError.
    static ExperimentConfig parse(const std::string &toml_text, const std::filesystem::path &base_dir = ".");
    static ExperimentConfig load(const std::filesystem::path &path);
};

}  // namespace alab::harness
