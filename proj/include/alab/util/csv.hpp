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

namespace alab::util {

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by name; throws std::invalid_argument naming the missing column.
    std::size_t column(const std::string &name) const;
    double number(std::size_t row, const std::string &name) const;
};

CsvTable read_csv(const std::filesystem::path &path);
CsvTable parse_csv(const std::string &text);

/// Shortest round-trip representation; stable across runs.
std::string format_number(double value);

std::string to_csv(const CsvTable &table);
void write_text(const std::filesystem::path &path, const std::string &text);

}  // namespace alab::util
