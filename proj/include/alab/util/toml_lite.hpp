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
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace alab::util {

// Reader for the TOML subset used by experiment configs: [table] headers, key = value
// pairs, strings, numbers, booleans and (possibly multi-line) flat arrays. Nested arrays,
// inline tables, dates and dotted keys are rejected with a line-numbered error.
struct TomlValue {
    using Array = std::vector<TomlValue>;
    std::variant<std::string, double, bool, Array> value;

    bool is_string() const {
        return std::holds_alternative<std::string>(value);
    }
    bool is_number() const {
        return std::holds_alternative<double>(value);
    }
    bool is_bool() const {
        return std::holds_alternative<bool>(value);
    }
    bool is_array() const {
        return std::holds_alternative<Array>(value);
    }
};

class TomlDocument {
   public:
    static TomlDocument parse(const std::string &text);
    static TomlDocument load(const std::filesystem::path &path);

    bool has_table(const std::string &table) const;
    const TomlValue *find(const std::string &table, const std::string &key) const;

    std::optional<std::string> get_string(const std::string &table, const std::string &key) const;
    std::optional<double> get_number(const std::string &table, const std::string &key) const;
    std::optional<bool> get_bool(const std::string &table, const std::string &key) const;
    std::optional<std::vector<double>> get_numbers(const std::string &table, const std::string &key) const;
    std::optional<std::vector<std::string>> get_strings(const std::string &table, const std::string &key) const;

    // "" is the root table.
    std::map<std::string, std::map<std::string, TomlValue>> tables;
};

}  // namespace alab::util
