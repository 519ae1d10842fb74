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

#include "alab/model/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alab/util/csv.hpp"

namespace alab::model {

namespace {
constexpr double kEndpointTolerance = 1e-9;
constexpr double kMinInitialRatio = 10.0;
}  // namespace

Schedule::Schedule(std::vector<ScheduleSample> samples) : samples_(std::move(samples)) {
    if (samples_.size() < 2) {
        throw std::invalid_argument("schedule: need at least two samples");
    }
    if (std::abs(samples_.front().s) > kEndpointTolerance || std::abs(samples_.back().s - 1.0) > kEndpointTolerance) {
        throw std::invalid_argument("schedule: s must run from 0 to 1");
    }
    samples_.front().s = 0.0;
    samples_.back().s = 1.0;
    for (std::size_t i = 0; i < samples_.size(); ++i) {
        const auto &p = samples_[i];
        if (!std::isfinite(p.A) || !std::isfinite(p.B) || p.A < 0 || p.B < 0) {
            throw std::invalid_argument("schedule: A and B must be finite and non-negative");
        }
        if (i == 0) {
            continue;
        }
        const auto &q = samples_[i - 1];
        if (!(p.s > q.s)) {
            throw std::invalid_argument("schedule: s must be strictly increasing (row " + std::to_string(i) + ")");
        }
        if (p.A > q.A) {
            throw std::invalid_argument("schedule: A(s) must be non-increasing (row " + std::to_string(i) + ")");
        }
        if (p.B < q.B) {
            throw std::invalid_argument("schedule: B(s) must be non-decreasing (row " + std::to_string(i) + ")");
        }
    }
    if (samples_.back().A > 1e-6 * std::max(1.0, samples_.front().A)) {
        throw std::invalid_argument("schedule: A(1) must vanish");
    }
    if (samples_.front().A < kMinInitialRatio * samples_.front().B) {
        throw std::invalid_argument("schedule: need A(0)/B(0) >= 10");
    }
}

ScheduleValue Schedule::at(double s) const {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw std::out_of_range("schedule: s=" + std::to_string(s) + " outside [0, 1]");
    }
    auto it = std::upper_bound(samples_.begin(), samples_.end(), s,
                               [](double value, const ScheduleSample &p) { return value < p.s; });
    if (it == samples_.end()) {
        return {samples_.back().A, samples_.back().B};
    }
    if (it == samples_.begin()) {
        return {samples_.front().A, samples_.front().B};
    }
    const auto &hi = *it;
    const auto &lo = *(it - 1);
    double t = (s - lo.s) / (hi.s - lo.s);
    return {lo.A + t * (hi.A - lo.A), lo.B + t * (hi.B - lo.B)};
}

Schedule Schedule::load_csv(const std::filesystem::path &path) {
    auto table = util::read_csv(path);
    std::vector<ScheduleSample> samples;
    samples.reserve(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        samples.push_back({table.number(r, "s"), table.number(r, "A_GHz"), table.number(r, "B_GHz")});
    }
    return Schedule(std::move(samples));
}

std::string Schedule::to_csv() const {
    util::CsvTable table;
    table.header = {"s", "A_GHz", "B_GHz"};
    for (const auto &p : samples_) {
        table.rows.push_back({util::format_number(p.s), util::format_number(p.A), util::format_number(p.B)});
    }
    return util::to_csv(table);
}

Schedule Schedule::synthetic() {
    constexpr int kPoints = 1001;
    std::vector<ScheduleSample> samples(kPoints);
    for (int i = 0; i < kPoints; ++i) {
        double s = static_cast<double>(i) / (kPoints - 1);
        samples[i] = {s, 6.0 * (1.0 - s), 0.3 + 5.7 * s};
    }
    samples.back().A = 0.0;
    return Schedule(std::move(samples));
}

}  // namespace alab::model
