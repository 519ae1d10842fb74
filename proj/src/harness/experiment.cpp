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

#include "alab/harness/experiment.hpp"

#include <algorithm>
#include <cctype>
#include <json.hpp>
#include <map>
#include <optional>

#include "alab/harness/scaling.hpp"
#include "alab/model/ground.hpp"
#include "alab/model/motif.hpp"
#include "alab/openquantum/populations.hpp"
#include "alab/spectrum/profile.hpp"
#include "alab/spinvector/potential.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/hash.hpp"
#include "alab/util/parallel.hpp"
#include "alab/util/rng.hpp"

namespace alab::harness {

namespace {

using Json = nlohmann::ordered_json;
using util::format_number;

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    return s;
}

class Collector {
   public:
    explicit Collector(std::filesystem::path dir) : dir_(std::move(dir)) {
    }

    void write(const std::string &name, const std::string &text) {
        util::write_text(dir_ / name, text);
        outputs.push_back({name, util::sha256_hex(text)});
    }

    std::vector<OutputFile> outputs;

   private:
    std::filesystem::path dir_;
};

struct Context {
    Context(const ExperimentConfig &cfg)
        : config(cfg), schedule(cfg.load_schedule()), jobs(util::resolve_jobs(cfg.jobs)), collector(cfg.out_dir) {
    }

    const ExperimentConfig &config;
    model::Schedule schedule;
    int jobs;
    Collector collector;
    ExperimentSummary summary;
    Json seeds = Json::array();
    Json fits = Json::object();
    std::map<double, spectrum::GapProfile> profiles;
    std::map<double, double> probe_grounds;

    double t_qa_s() const {
        return config.t_qa_us * 1e-6;
    }

    void fail(Engine engine, const std::string &point, const std::exception &e) {
        summary.failures.push_back({to_string(engine), point, e.what()});
        summary.partial = true;
    }

    std::uint64_t seed_for(Engine engine, std::size_t index, const std::string &point) {
        std::uint64_t s = point_seed(config.seed, engine, index);
        seeds.push_back({{"engine", to_string(engine)}, {"point", point}, {"seed", s}});
        return s;
    }

    const spectrum::GapProfile &profile(double h) {
        auto it = profiles.find(h);
        if (it != profiles.end()) {
            return it->second;
        }
        spectrum::ProfileOptions options;
        options.jobs = jobs;
        auto p = spectrum::compute_profile(model::build_probe(h), schedule, options);
        double omega_min = std::min_element(p.rows.begin(), p.rows.end(), [](const auto &a, const auto &b) {
                               return a.omega10 < b.omega10;
                           })->omega10;
        if (omega_min < config.noise.W_GHz) {
            summary.advisories.push_back("h_L=" + format_number(h) + ": minimum gap " + format_number(omega_min) +
                                         " GHz is below the noise linewidth; pointer-state dynamics not modelled");
        }
        return profiles.emplace(h, std::move(p)).first->second;
    }

    double probe_ground(double h) {
        auto it = probe_grounds.find(h);
        if (it == probe_grounds.end()) {
            it = probe_grounds.emplace(h, model::brute_force_ground(model::build_probe(h)).energy).first;
        }
        return it->second;
    }
};

model::RunResult run_sampler(Context &ctx, Engine engine, const model::Instance &instance, double temperature_mK,
                             std::uint64_t seed, double ground_energy) {
    if (engine == Engine::SVMC) {
        auto p = ctx.config.svmc;
        p.temperature_mK = temperature_mK;
        p.replicas = ctx.config.replicas;
        p.seed = seed;
        p.jobs = ctx.jobs;
        return spinvector::svmc_run(instance, ctx.schedule, p, ground_energy);
    }
    auto p = ctx.config.pimc;
    p.temperature_mK = temperature_mK;
    p.replicas = ctx.config.replicas;
    p.seed = seed;
    p.jobs = ctx.jobs;
    return pimc::pimcqa_run(instance, ctx.schedule, p, ground_energy);
}

openquantum::RateKind rate_kind(Engine engine) {
    return engine == Engine::NIBA ? openquantum::RateKind::NIBA : openquantum::RateKind::GoldenRule;
}

bool is_sampler(Engine engine) {
    return engine == Engine::SVMC || engine == Engine::PIMC;
}

void run_sweep(Context &ctx) {
    const auto &cfg = ctx.config;
    const std::string prefix = lower(to_string(cfg.experiment));
    for (Engine engine : cfg.engines) {
        util::CsvTable table;
        table.header = {"h_L",      "temperature_mK", "p_success", "ci_low", "ci_high", "successes",
                        "replicas", "seed",           "instance_hash"};
        for (std::size_t i = 0; i < cfg.h_L.size(); ++i) {
            for (std::size_t j = 0; j < cfg.temperatures_mK.size(); ++j) {
                const double h = cfg.h_L[i], T = cfg.temperatures_mK[j];
                const std::string point = "h_L=" + format_number(h) + ",T=" + format_number(T);
                try {
                    auto instance = model::build_probe(h);
                    if (is_sampler(engine)) {
                        auto seed = ctx.seed_for(engine, i * cfg.temperatures_mK.size() + j, point);
                        auto r = run_sampler(ctx, engine, instance, T, seed, ctx.probe_ground(h));
                        table.rows.push_back({format_number(h), format_number(T),
                                              format_number(r.success_probability()), format_number(r.ci_low),
                                              format_number(r.ci_high), std::to_string(r.successes),
                                              std::to_string(r.replicas), std::to_string(r.seed), r.instance_hash});
                    } else {
                        auto noise = cfg.noise;
                        noise.temperature_mK = T;
                        auto trace = openquantum::evolve_populations(ctx.profile(h), noise, ctx.t_qa_s(),
                                                                     rate_kind(engine), ctx.jobs);
                        double p = trace.success_probability();
                        table.rows.push_back({format_number(h), format_number(T), format_number(p), format_number(p),
                                              format_number(p), "", "", "", instance.hash()});
                    }
                } catch (const std::exception &e) {
                    ctx.fail(engine, point, e);
                }
            }
        }
        ctx.collector.write(prefix + "_" + lower(to_string(engine)) + ".csv", util::to_csv(table));
    }
}

void run_scaling(Context &ctx) {
    const auto &cfg = ctx.config;
    const double T = cfg.temperatures_mK.front();
    std::vector<int> sizes = cfg.motif_sizes;
    std::sort(sizes.begin(), sizes.end());
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    for (Engine engine : cfg.engines) {
        util::CsvTable table;
        table.header = {"n_q", "successes", "replicas", "p_success", "ci_low", "ci_high", "seed", "instance_hash"};
        std::vector<ScalingPoint> points;
        for (std::size_t i = 0; i < sizes.size(); ++i) {
            const int n = sizes[i];
            const std::string point = "n_q=" + std::to_string(n);
            try {
                auto spec = model::MotifSpec::for_size(n, cfg.motif.glass_seed);
                spec.h_weak = cfg.motif.h_weak;
                spec.h_strong = cfg.motif.h_strong;
                auto instance = model::generate_motif_glass(spec);
                double ground = model::reference_ground(instance).energy;
                auto seed = ctx.seed_for(engine, i, point);
                auto r = run_sampler(ctx, engine, instance, T, seed, ground);
                points.push_back({n, r.successes, r.replicas});
                table.rows.push_back({std::to_string(n), std::to_string(r.successes), std::to_string(r.replicas),
                                      format_number(r.success_probability()), format_number(r.ci_low),
                                      format_number(r.ci_high), std::to_string(r.seed), r.instance_hash});
            } catch (const std::exception &e) {
                ctx.fail(engine, point, e);
            }
        }
        const std::string stem = "scaling_" + lower(to_string(engine));
        ctx.collector.write(stem + ".csv", util::to_csv(table));
        try {
            auto fit = fit_scaling(points, cfg.resamples, util::mix_seed(cfg.seed, 0x666974ULL));
            ctx.collector.write(stem + "_fit.csv", fit.to_csv());
            ctx.fits[to_string(engine)] = {{"alpha", fit.alpha},
                                           {"alpha_err", fit.alpha_err},
                                           {"intercept", fit.intercept},
                                           {"r_squared", fit.r_squared},
                                           {"resamples", fit.resamples}};
        } catch (const std::exception &e) {
            ctx.fail(engine, "fit", e);
        }
    }
}

void run_profile(Context &ctx) {
    const auto &cfg = ctx.config;
    util::CsvTable gaps;
    gaps.header = {"h_L", "s_star", "omega_min"};
    std::vector<double> ok;
    for (double h : cfg.h_L) {
        try {
            const auto &p = ctx.profile(h);
            const std::string tag = "h" + format_number(h);
            ctx.collector.write("profile_" + tag + ".csv", p.to_csv());
            ctx.collector.write("polarizations_" + tag + ".csv", p.polarizations_csv());
            auto it = std::min_element(p.rows.begin(), p.rows.end(),
                                       [](const auto &a, const auto &b) { return a.omega10 < b.omega10; });
            gaps.rows.push_back({format_number(h), format_number(it->s), format_number(it->omega10)});
            ok.push_back(h);
        } catch (const std::exception &e) {
            for (Engine engine : cfg.engines) {
                ctx.fail(engine, "h_L=" + format_number(h), e);
            }
        }
    }
    ctx.collector.write("profile_gaps.csv", util::to_csv(gaps));
    for (Engine engine : cfg.engines) {
        util::CsvTable table;
        table.header = {"h_L", "temperature_mK", "p_success", "s_thermalized_end", "s_frozen_start"};
        const std::string name = lower(to_string(engine));
        for (double h : ok) {
            for (double T : cfg.temperatures_mK) {
                const std::string point = "h_L=" + format_number(h) + ",T=" + format_number(T);
                try {
                    auto noise = cfg.noise;
                    noise.temperature_mK = T;
                    auto rates = openquantum::compute_rates(ctx.profile(h), noise, rate_kind(engine), ctx.t_qa_s(),
                                                            ctx.jobs);
                    auto regimes = openquantum::classify_regimes(rates, ctx.t_qa_s());
                    auto trace = openquantum::evolve_populations(rates, T, ctx.t_qa_s());
                    const std::string tag = name + "_h" + format_number(h) + "_T" + format_number(T);
                    ctx.collector.write("rates_" + tag + ".csv", openquantum::rates_csv(regimes.points));
                    ctx.collector.write("populations_" + tag + ".csv", trace.to_csv());
                    std::string b0 = regimes.boundaries.size() > 0 ? format_number(regimes.boundaries[0]) : "";
                    std::string b1 = regimes.boundaries.size() > 1 ? format_number(regimes.boundaries[1]) : "";
                    table.rows.push_back(
                        {format_number(h), format_number(T), format_number(trace.success_probability()), b0, b1});
                } catch (const std::exception &e) {
                    ctx.fail(engine, point, e);
                }
            }
        }
        ctx.collector.write("profile_" + name + ".csv", util::to_csv(table));
    }
}

void run_potential(Context &ctx) {
    const auto &cfg = ctx.config;
    util::CsvTable table;
    table.header = {"h_L", "bifurcation_s", "crossover_s", "final_theta_L", "final_theta_R", "trapped"};
    auto grid = spinvector::uniform_grid(0.0, 1.0, 201);
    for (double h : cfg.h_L) {
        try {
            auto surface = spinvector::trace_minima(model::build_probe(h), ctx.schedule, grid);
            const std::string tag = "h" + format_number(h);
            ctx.collector.write("potential_" + tag + ".csv", surface.to_csv());
            ctx.collector.write("potential_paths_" + tag + ".csv", surface.paths_csv());
            const auto &end = surface.path("initial").points.back();
            // Trapped when the left cluster ends opposite the right cluster.
            bool trapped = (std::sin(end.theta_left) > 0) != (std::sin(end.theta_right) > 0);
            table.rows.push_back({format_number(h),
                                  surface.bifurcation_s ? format_number(*surface.bifurcation_s) : "",
                                  surface.crossover_s ? format_number(*surface.crossover_s) : "",
                                  format_number(end.theta_left), format_number(end.theta_right),
                                  trapped ? "true" : "false"});
        } catch (const std::exception &e) {
            ctx.fail(Engine::SVMC, "h_L=" + format_number(h), e);
        }
    }
    ctx.collector.write("potential_svmc.csv", util::to_csv(table));
}

}  // namespace

std::uint64_t point_seed(std::uint64_t seed, Engine engine, std::size_t index) {
    return util::mix_seed(util::mix_seed(seed, static_cast<std::uint64_t>(engine) + 1), index);
}

ExperimentSummary run_experiment(const ExperimentConfig &config) {
    config.validate();
    Context ctx(config);
    std::filesystem::create_directories(config.out_dir);
    switch (config.experiment) {
        case Experiment::PvsHL:
        case Experiment::PvsT:
            run_sweep(ctx);
            break;
        case Experiment::Scaling:
            run_scaling(ctx);
            break;
        case Experiment::Profile:
            run_profile(ctx);
            break;
        case Experiment::Potential:
            run_potential(ctx);
            break;
    }

    Json manifest;
    manifest["schema_version"] = kManifestSchemaVersion;
    manifest["version"] = kLabVersion;
    manifest["experiment"] = to_string(config.experiment);
    manifest["config_hash"] = config.hash();
    manifest["config"] = Json::parse(config.canonical_json());
    manifest["schedule_sha256"] = util::sha256_hex(ctx.schedule.to_csv());
    manifest["seed"] = config.seed;
    manifest["seeds"] = ctx.seeds;
    manifest["outputs"] = Json::array();
    for (const auto &o : ctx.collector.outputs) {
        manifest["outputs"].push_back({{"path", o.path}, {"sha256", o.sha256}});
    }
    manifest["failures"] = Json::array();
    for (const auto &f : ctx.summary.failures) {
        manifest["failures"].push_back({{"engine", f.engine}, {"point", f.point}, {"error", f.error}});
    }
    manifest["partial"] = ctx.summary.partial;
    manifest["fits"] = ctx.fits;
    manifest["advisories"] = ctx.summary.advisories;

    ctx.summary.outputs = ctx.collector.outputs;
    ctx.summary.manifest = config.out_dir / "manifest.json";
    util::write_text(ctx.summary.manifest, manifest.dump(2) + "\n");
    return ctx.summary;
}

}  // namespace alab::harness
