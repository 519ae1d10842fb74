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

namespace alab::model {

struct ScheduleSample {
    double s;
    double A;  // GHz
    double B;  // GHz
};

struct ScheduleValue {
    double A;
    double B;
};

/// Annealing envelopes A(s), B(s) sampled on [0, 1], linearly interpolated.
/// Validated on construction: s strictly increasing from 0 to 1, A non-increasing with
/// A(1) = 0, B non-decreasing, A(0)/B(0) >= 10.
class Schedule {
   public:
    explicit Schedule(std::vector<ScheduleSample> samples);

    ScheduleValue at(double s) const;
    const std::vector<ScheduleSample> &samples() const {
        return samples_;
    }

    static Schedule load_csv(const std::filesystem::path &path);
    std::string to_csv() const;

    /// Shipped synthetic schedule, 1001 points: A(s) = 6 (1 - s), B(s) = 0.3 + 5.7 s (GHz).
    static Schedule synthetic();

   private:
    std::vector<ScheduleSample> samples_;
};

/// Free-function form of Schedule::at.
inline ScheduleValue schedule_at(const Schedule &schedule, double s) {
    return schedule.at(s);
}

}  // namespace alab::model
