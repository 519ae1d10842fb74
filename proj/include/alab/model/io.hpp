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

#include "alab/model/instance.hpp"

namespace alab::model {

/// {"num_qubits": n, "h": [...], "J": [[i, j, v], ...], "clusters": ["left", "black:3", ...]}
std::string instance_to_json(const Instance &instance);
Instance instance_from_json(const std::string &text);

Instance load_instance(const std::filesystem::path &path);
void save_instance(const std::filesystem::path &path, const Instance &instance);

}  // namespace alab::model
