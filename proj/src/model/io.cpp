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

#include "alab/model/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "alab/util/csv.hpp"

namespace alab::model {

using nlohmann::json;

std::string instance_to_json(const Instance &instance) {
    json j;
    j["num_qubits"] = instance.num_qubits();
    j["h"] = std::vector<double>(instance.fields().begin(), instance.fields().end());
    json couplings = json::array();
    for (const auto &c : instance.couplings()) {
        couplings.push_back(json::array({c.i, c.j, c.value}));
    }
    j["J"] = couplings;
    json clusters = json::array();
    for (const auto &l : instance.labels()) {
        clusters.push_back(to_string(l));
    }
    j["clusters"] = clusters;
    return j.dump();
}

Instance instance_from_json(const std::string &text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        throw std::invalid_argument(std::string("instance json: ") + e.what());
    }
    for (const char *key : {"num_qubits", "h", "J", "clusters"}) {
        if (!j.contains(key)) {
            throw std::invalid_argument(std::string("instance json: missing field '") + key + "'");
        }
    }
    int n = j["num_qubits"].get<int>();
    auto fields = j["h"].get<std::vector<double>>();
    if (static_cast<int>(fields.size()) != n) {
        throw std::invalid_argument("instance json: num_qubits does not match the length of h");
    }
    std::vector<Coupling> couplings;
    for (const auto &row : j["J"]) {
        if (!row.is_array() || row.size() != 3) {
            throw std::invalid_argument("instance json: J entries must be [i, j, value]");
        }
        couplings.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<double>()});
    }
    std::vector<ClusterLabel> labels;
    for (const auto &label : j["clusters"]) {
        labels.push_back(parse_cluster_label(label.get<std::string>()));
    }
    return Instance(std::move(fields), std::move(couplings), std::move(labels));
}

Instance load_instance(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open instance " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

void save_instance(const std::filesystem::path &path, const Instance &instance) {
    util::write_text(path, instance_to_json(instance) + "\n");
}

}  // namespace alab::model
