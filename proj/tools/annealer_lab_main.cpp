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

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>

#include "alab/harness/config.hpp"
#include "alab/harness/experiment.hpp"
#include "alab/harness/scaling.hpp"
#include "alab/model/instance.hpp"
#include "alab/spectrum/profile.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/parallel.hpp"

namespace {

using namespace alab;

int cmd_run(const std::string &config_path, std::optional<std::uint64_t> seed, std::optional<std::string> out_dir,
            std::optional<int> replicas, std::optional<int> jobs, std::optional<double> h_weak,
            std::optional<double> h_strong, std::optional<std::uint64_t> glass_seed) {
    auto config = harness::ExperimentConfig::load(config_path);
    if (seed) config.seed = *seed;
    if (out_dir) config.out_dir = *out_dir;
    if (replicas) config.replicas = *replicas;
    if (jobs) config.jobs = *jobs;
    if (h_weak) config.motif.h_weak = *h_weak;
    if (h_strong) config.motif.h_strong = *h_strong;
    if (glass_seed) config.motif.glass_seed = *glass_seed;
    auto summary = harness::run_experiment(config);
    for (const auto &o : summary.outputs) {
        std::cout << (config.out_dir / o.path).string() << "  " << o.sha256 << "\n";
    }
    std::cout << summary.manifest.string() << "\n";
    for (const auto &a : summary.advisories) {
        std::cerr << "advisory: " << a << "\n";
    }
    for (const auto &f : summary.failures) {
        std::cerr << "failed: " << f.engine << " " << f.point << ": " << f.error << "\n";
    }
    return summary.partial ? 3 : 0;
}

int cmd_fit(const std::string &input, int resamples, std::uint64_t seed, std::optional<std::string> output) {
    auto points = harness::scaling_points_from_csv(util::to_csv(util::read_csv(input)));
    auto fit = harness::fit_scaling(points, resamples, seed);
    if (output) {
        util::write_text(*output, fit.to_csv());
    } else {
        std::cout << fit.to_csv();
    }
    return 0;
}

int cmd_profile(double h_l, const std::string &schedule_path, const std::string &out_dir, int jobs) {
    auto schedule = schedule_path.empty() ? model::Schedule::synthetic() : model::Schedule::load_csv(schedule_path);
    spectrum::ProfileOptions options;
    options.jobs = util::resolve_jobs(jobs);
    auto profile = spectrum::compute_profile(model::build_probe(h_l), schedule, options);
    std::filesystem::create_directories(out_dir);
    const std::string tag = "h" + util::format_number(h_l);
    const auto gap_path = std::filesystem::path(out_dir) / ("profile_" + tag + ".csv");
    util::write_text(gap_path, profile.to_csv());
    util::write_text(std::filesystem::path(out_dir) / ("polarizations_" + tag + ".csv"),
                     profile.polarizations_csv());
    auto it = std::min_element(profile.rows.begin(), profile.rows.end(),
                               [](const auto &a, const auto &b) { return a.omega10 < b.omega10; });
    std::cout << gap_path.string() << "\n"
              << "s_star=" << util::format_number(it->s) << " omega_min_GHz=" << util::format_number(it->omega10)
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"annealer-lab: quantum annealing signature experiments"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "run an experiment from a TOML config");
    std::string config_path;
    std::optional<std::uint64_t> seed, glass_seed;
    std::optional<std::string> out_dir;
    std::optional<int> replicas, jobs;
    std::optional<double> h_weak, h_strong;
    run->add_option("--config", config_path, "experiment config")->required()->check(CLI::ExistingFile);
    run->add_option("--seed", seed, "master seed");
    run->add_option("--out-dir", out_dir, "output directory");
    run->add_option("--replicas", replicas, "replicas per point");
    run->add_option("--jobs", jobs, "worker threads (0 = all cores)");
    run->add_option("--h-weak", h_weak, "motif weak field");
    run->add_option("--h-strong", h_strong, "motif strong field");
    run->add_option("--glass-seed", glass_seed, "motif glass seed");

    auto *fit = app.add_subcommand("fit", "fit ln p against n_q from a scaling CSV");
    std::string input;
    int resamples = 2000;
    std::uint64_t fit_seed = 1;
    std::optional<std::string> fit_out;
    fit->add_option("--input", input, "CSV with n_q,successes,replicas")->required()->check(CLI::ExistingFile);
    fit->add_option("--resamples", resamples, "bootstrap resamples")->check(CLI::PositiveNumber);
    fit->add_option("--seed", fit_seed, "bootstrap seed");
    fit->add_option("--output", fit_out, "write the fit CSV here instead of stdout");

    auto *profile = app.add_subcommand("profile", "two-level gap profile of a probe instance");
    double h_l = 0.44;
    std::string schedule_path;
    std::string profile_out = "results";
    int profile_jobs = 1;
    profile->add_option("--h-l", h_l, "left-cluster field")->required();
    profile->add_option("--schedule", schedule_path, "schedule CSV (s,A_GHz,B_GHz)")->check(CLI::ExistingFile);
    profile->add_option("--out-dir", profile_out, "output directory");
    profile->add_option("--jobs", profile_jobs, "worker threads (0 = all cores)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            return cmd_run(config_path, seed, out_dir, replicas, jobs, h_weak, h_strong, glass_seed);
        }
        if (fit->parsed()) {
            return cmd_fit(input, resamples, fit_seed, fit_out);
        }
        return cmd_profile(h_l, schedule_path, profile_out, profile_jobs);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
