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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <random>

#include "alab/util/csv.hpp"
#include "alab/util/hash.hpp"
#include "alab/util/parallel.hpp"
#include "alab/util/rng.hpp"
#include "alab/util/stats.hpp"
#include "alab/util/toml_lite.hpp"

using namespace alab::util;

TEST(Hash, Sha256KnownVectors) {
    EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
    EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Rng, DerivedStreamsAreReproducibleAndDistinct) {
    auto a = derived_stream(42, 3, 7);
    auto b = derived_stream(42, 3, 7);
    auto c = derived_stream(42, 4, 7);
    auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
    EXPECT_NE(mix_seed(1, 2), mix_seed(2, 1));
}

TEST(Rng, Uniform01InUnitInterval) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 10000; ++i) {
        double u = uniform01(rng);
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Stats, WilsonMatchesClosedForm) {
    auto ci = wilson_interval(30, 100);
    const double z = kZ95, n = 100, p = 0.3;
    double centre = (p + z * z / (2 * n)) / (1 + z * z / n);
    double half = z / (1 + z * z / n) * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
    EXPECT_NEAR(ci.low, centre - half, 1e-12);
    EXPECT_NEAR(ci.high, centre + half, 1e-12);
    auto zero = wilson_interval(0, 50);
    EXPECT_DOUBLE_EQ(zero.low, 0.0);
    EXPECT_GT(zero.high, 0.0);
}

TEST(Stats, WilsonCoverageAtNominal95) {
    std::mt19937_64 rng(2024);
    int covered = 0, trials = 0;
    for (double p : {0.02, 0.1, 0.3, 0.5, 0.8, 0.97}) {
        for (int n : {50, 200, 1000}) {
            std::binomial_distribution<int> draw(n, p);
            for (int t = 0; t < 400; ++t) {
                auto ci = wilson_interval(draw(rng), n);
                covered += (ci.low <= p && p <= ci.high);
                ++trials;
            }
        }
    }
    EXPECT_GE(static_cast<double>(covered) / trials, 0.93);
}

TEST(Stats, WilsonWidthShrinksAsInverseRoot) {
    auto w1 = wilson_interval(300, 1000);
    auto w4 = wilson_interval(1200, 4000);
    double ratio = (w1.high - w1.low) / (w4.high - w4.low);
    EXPECT_NEAR(ratio, 2.0, 0.02);
}

TEST(Stats, LinearFitExactLine) {
    std::vector<double> x{1, 2, 3, 4}, y{3, 5, 7, 9};
    auto fit = linear_fit(x, y);
    EXPECT_NEAR(fit.slope, 2.0, 1e-12);
    EXPECT_NEAR(fit.intercept, 1.0, 1e-12);
    EXPECT_NEAR(fit.r_squared, 1.0, 1e-12);
}

TEST(Csv, RoundTripAndLookup) {
    CsvTable t;
    t.header = {"a", "b"};
    t.rows = {{"1", "2.5"}, {"3", ""}};
    auto back = parse_csv(to_csv(t));
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
    EXPECT_DOUBLE_EQ(back.number(0, "b"), 2.5);
    EXPECT_THROW(back.column("c"), std::exception);
}

TEST(Csv, FormatNumberRoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 1e-20, 5.76, -2.5e7}) {
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
}

TEST(Toml, ParsesTablesArraysAndComments) {
    auto doc = TomlDocument::parse(R"(
experiment = "PvsT"   # trailing
engines = ["SVMC", "NIBA"]
seed = 7

[grid]
h_L = [0.40, 0.44]
flag = true
)");
    EXPECT_EQ(doc.get_string("", "experiment").value(), "PvsT");
    EXPECT_EQ(doc.get_strings("", "engines").value(), (std::vector<std::string>{"SVMC", "NIBA"}));
    EXPECT_EQ(doc.get_number("", "seed").value(), 7.0);
    EXPECT_EQ(doc.get_numbers("grid", "h_L").value(), (std::vector<double>{0.40, 0.44}));
    EXPECT_TRUE(doc.get_bool("grid", "flag").value());
    EXPECT_FALSE(doc.get_number("grid", "missing").has_value());
}

TEST(Toml, RejectsMalformedInput) {
    EXPECT_THROW(TomlDocument::parse("x = \n"), std::exception);
    EXPECT_THROW(TomlDocument::parse("[grid\nx = 1\n"), std::exception);
}

TEST(Parallel, EveryIndexRunsOnce) {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i] += 1; });
    for (int h : hits) {
        ASSERT_EQ(h, 1);
    }
}

TEST(Parallel, RethrowsWorkerException) {
    EXPECT_THROW(parallel_for(10, 3,
                              [](std::size_t i) {
                                  if (i == 7) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}

TEST(Parallel, EnvironmentCapsJobs) {
    setenv("ANNEALER_LAB_THREADS", "2", 1);
    EXPECT_EQ(resolve_jobs(8), 2);
    EXPECT_LE(resolve_jobs(0), 2);
    unsetenv("ANNEALER_LAB_THREADS");
    EXPECT_EQ(resolve_jobs(3), 3);
}
