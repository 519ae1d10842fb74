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

#include "alab/harness/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "alab/util/hash.hpp"
#include "alab/util/toml_lite.hpp"

namespace alab::harness {

namespace {

using Json = nlohmann::ordered_json;

const std::map<std::string, std::set<std::string>> &known_keys() {
    static const std::map<std::string, std::set<std::string>> keys = {
        {"", {"experiment", "engines", "seed", "replicas", "t_qa_us", "out_dir", "schedule", "jobs", "resamples"}},
        {"grid", {"h_L", "temperature_mK", "motif_sizes"}},
        {"svmc", {"sweeps", "proposal_width"}},
        {"pimc", {"trotter_slices", "sweeps", "readout"}},
        {"noise", {"W_GHz", "eta", "tau_c_s", "temperature_mK"}},
        {"motif", {"h_weak", "h_strong", "glass_seed"}},
    };
    return keys;
}

int as_int(double v, const std::string &name) {
    if (std::floor(v) != v || std::abs(v) > 2e9) {
        throw ConfigError("config: '" + name + "' must be an integer");
    }
    return static_cast<int>(v);
}

std::uint64_t as_seed(double v, const std::string &name) {
    if (std::floor(v) != v || v < 0 || v > 9007199254740992.0) {
        throw ConfigError("config: '" + name + "' must be a non-negative integer");
    }
    return static_cast<std::uint64_t>(v);
}

bool supports(Experiment experiment, Engine engine) {
    switch (experiment) {
        case Experiment::PvsHL:
        case Experiment::PvsT:
            return true;
        case Experiment::Scaling:
            return engine == Engine::SVMC || engine == Engine::PIMC;
        case Experiment::Profile:
            return engine == Engine::GoldenRule || engine == Engine::NIBA;
        case Experiment::Potential:
            return engine == Engine::SVMC;
    }
    return false;
}

}  // namespace

std::string to_string(Experiment experiment) {
    switch (experiment) {
        case Experiment::PvsHL:
            return "PvsHL";
        case Experiment::PvsT:
            return "PvsT";
        case Experiment::Scaling:
            return "Scaling";
        case Experiment::Profile:
            return "Profile";
        case Experiment::Potential:
            return "Potential";
    }
    return "unknown";
}

std::string to_string(Engine engine) {
    switch (engine) {
        case Engine::SVMC:
            return "SVMC";
        case Engine::PIMC:
            return "PIMC";
        case Engine::GoldenRule:
            return "GoldenRule";
        case Engine::NIBA:
            return "NIBA";
    }
    return "unknown";
}

Experiment parse_experiment(const std::string &text) {
    for (auto e : {Experiment::PvsHL, Experiment::PvsT, Experiment::Scaling, Experiment::Profile,
                   Experiment::Potential}) {
        if (text == to_string(e)) {
            return e;
        }
    }
    throw ConfigError("config: unknown experiment '" + text + "'");
}

Engine parse_engine(const std::string &text) {
    for (auto e : {Engine::SVMC, Engine::PIMC, Engine::GoldenRule, Engine::NIBA}) {
        if (text == to_string(e)) {
            return e;
        }
    }
    throw ConfigError("config: unknown engine '" + text + "'");
}

void ExperimentConfig::validate() const {
    if (engines.empty()) {
        throw ConfigError("config: engine list is empty");
    }
    std::set<Engine> seen;
    for (auto e : engines) {
        if (!seen.insert(e).second) {
            throw ConfigError("config: engine " + to_string(e) + " listed twice");
        }
        if (!supports(experiment, e)) {
            throw ConfigError("config: engine " + to_string(e) + " does not apply to experiment " +
                              to_string(experiment));
        }
    }
    if (replicas < 1) {
        throw ConfigError("config: replicas must be >= 1");
    }
    if (!(t_qa_us > 0)) {
        throw ConfigError("config: t_qa_us must be positive");
    }
    if (resamples < 2) {
        throw ConfigError("config: resamples must be >= 2");
    }
    if (experiment != Experiment::Scaling) {
        if (h_L.empty()) {
            throw ConfigError("config: grid.h_L is empty");
        }
        for (double h : h_L) {
            if (!(h > 0 && h < 0.5)) {
                throw ConfigError("config: grid.h_L values must lie in (0, 0.5)");
            }
        }
    }
    if (temperatures_mK.empty()) {
        throw ConfigError("config: grid.temperature_mK is empty");
    }
    for (double t : temperatures_mK) {
        if (!(t > 0)) {
            throw ConfigError("config: temperatures must be positive");
        }
    }
    if (experiment == Experiment::Scaling) {
        if (temperatures_mK.size() != 1) {
            throw ConfigError("config: Scaling runs at a single temperature");
        }
        std::set<int> sizes(motif_sizes.begin(), motif_sizes.end());
        if (sizes.size() < 3) {
            throw ConfigError("config: Scaling needs at least three distinct motif sizes");
        }
        for (int n : motif_sizes) {
            if (n < 16 || n % 8 != 0) {
                throw ConfigError("config: motif sizes must be multiples of 8 and at least 16");
            }
        }
        if (!(motif.h_weak > 0 && motif.h_weak < 0.5) || !(motif.h_strong < 0)) {
            throw ConfigError("config: motif needs 0 < h_weak < 0.5 and h_strong < 0");
        }
    }
    try {
        svmc.validate();
        pimc.validate();
        noise.validate();
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    try {
        (void)load_schedule();
    } catch (const std::exception &e) {
        throw ConfigError("config: schedule '" + schedule + "' unusable: " + e.what());
    }
}

model::Schedule ExperimentConfig::load_schedule() const {
    if (schedule == "synthetic") {
        return model::Schedule::synthetic();
    }
    std::filesystem::path p(schedule);
    if (p.is_relative()) {
        p = base_dir / p;
    }
    return model::Schedule::load_csv(p);
}

std::string ExperimentConfig::canonical_json() const {
    Json j;
    j["experiment"] = to_string(experiment);
    j["engines"] = Json::array();
    for (auto e : engines) {
        j["engines"].push_back(to_string(e));
    }
    j["seed"] = seed;
    j["replicas"] = replicas;
    j["t_qa_us"] = t_qa_us;
    j["schedule"] = schedule;
    j["resamples"] = resamples;
    j["grid"] = {{"h_L", h_L}, {"temperature_mK", temperatures_mK}, {"motif_sizes", motif_sizes}};
    j["svmc"] = {{"sweeps", svmc.sweeps}, {"proposal_width", svmc.proposal_width}};
    j["pimc"] = {{"trotter_slices", pimc.trotter_slices},
                 {"sweeps", pimc.sweeps},
                 {"readout", pimc::to_string(pimc.readout)}};
    j["noise"] = {{"W_GHz", noise.W_GHz}, {"eta", noise.eta}, {"tau_c_s", noise.tau_c_s}};
    j["motif"] = {{"h_weak", motif.h_weak}, {"h_strong", motif.h_strong}, {"glass_seed", motif.glass_seed}};
    return j.dump();
}

std::string ExperimentConfig::hash() const {
    return util::sha256_hex(canonical_json());
}

ExperimentConfig ExperimentConfig::parse(const std::string &toml_text, const std::filesystem::path &base_dir) {
    util::TomlDocument doc;
    try {
        doc = util::TomlDocument::parse(toml_text);
    } catch (const std::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    for (const auto &[table, entries] : doc.tables) {
        auto it = known_keys().find(table);
        if (it == known_keys().end()) {
            throw ConfigError("config: unknown table [" + table + "]");
        }
        for (const auto &[key, value] : entries) {
            if (!it->second.count(key)) {
                throw ConfigError("config: unknown key '" + key + "'" + (table.empty() ? "" : " in [" + table + "]"));
            }
        }
    }

    auto number = [&](const std::string &table, const std::string &key) {
        try {
            return doc.get_number(table, key);
        } catch (const std::exception &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    };
    auto numbers = [&](const std::string &table, const std::string &key) {
        try {
            return doc.get_numbers(table, key);
        } catch (const std::exception &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    };
    auto string = [&](const std::string &table, const std::string &key) {
        try {
            return doc.get_string(table, key);
        } catch (const std::exception &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    };

    ExperimentConfig c;
    c.base_dir = base_dir;
    auto exp = string("", "experiment");
    if (!exp) {
        throw ConfigError("config: 'experiment' is required");
    }
    c.experiment = parse_experiment(*exp);
    std::optional<std::vector<std::string>> engines;
    try {
        engines = doc.get_strings("", "engines");
    } catch (const std::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    if (!engines) {
        throw ConfigError("config: 'engines' is required");
    }
    for (const auto &e : *engines) {
        c.engines.push_back(parse_engine(e));
    }
    if (auto v = number("", "seed")) {
        c.seed = as_seed(*v, "seed");
    }
    if (auto v = number("", "replicas")) {
        c.replicas = as_int(*v, "replicas");
    }
    if (auto v = number("", "t_qa_us")) {
        c.t_qa_us = *v;
    }
    if (auto v = string("", "out_dir")) {
        c.out_dir = *v;
        if (c.out_dir.is_relative()) {
            c.out_dir = base_dir / c.out_dir;
        }
    }
    if (auto v = string("", "schedule")) {
        c.schedule = *v;
    }
    if (auto v = number("", "jobs")) {
        c.jobs = as_int(*v, "jobs");
    }
    if (auto v = number("", "resamples")) {
        c.resamples = as_int(*v, "resamples");
    }

    if (auto v = number("noise", "temperature_mK")) {
        c.temperatures_mK = {*v};
    }
    if (auto v = numbers("grid", "h_L")) {
        c.h_L = *v;
    }
    if (auto v = numbers("grid", "temperature_mK")) {
        c.temperatures_mK = *v;
    }
    if (auto v = numbers("grid", "motif_sizes")) {
        c.motif_sizes.clear();
        for (double n : *v) {
            c.motif_sizes.push_back(as_int(n, "grid.motif_sizes"));
        }
    }
    if (auto v = number("svmc", "sweeps")) {
        c.svmc.sweeps = as_int(*v, "svmc.sweeps");
    }
    if (auto v = number("svmc", "proposal_width")) {
        c.svmc.proposal_width = *v;
    }
    if (auto v = number("pimc", "trotter_slices")) {
        c.pimc.trotter_slices = as_int(*v, "pimc.trotter_slices");
    }
    if (auto v = number("pimc", "sweeps")) {
        c.pimc.sweeps = as_int(*v, "pimc.sweeps");
    }
    if (auto v = string("pimc", "readout")) {
        try {
            c.pimc.readout = pimc::parse_readout(*v);
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("config: ") + e.what());
        }
    }
    if (auto v = number("noise", "W_GHz")) {
        c.noise.W_GHz = *v;
    }
    if (auto v = number("noise", "eta")) {
        c.noise.eta = *v;
    }
    if (auto v = number("noise", "tau_c_s")) {
        c.noise.tau_c_s = *v;
    }
    if (auto v = number("motif", "h_weak")) {
        c.motif.h_weak = *v;
    }
    if (auto v = number("motif", "h_strong")) {
        c.motif.h_strong = *v;
    }
    if (auto v = number("motif", "glass_seed")) {
        c.motif.glass_seed = as_seed(*v, "motif.glass_seed");
    }
    c.validate();
    return c;
}

ExperimentConfig ExperimentConfig::load(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("config: cannot open " + path.string());
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse(ss.str(), path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
}

}  // namespace alab::harness
