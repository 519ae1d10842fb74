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

#include "alab/model/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "alab/model/io.hpp"
#include "alab/util/errors.hpp"
#include "alab/util/hash.hpp"

namespace alab::model {

std::string to_string(const ClusterLabel &label) {
    switch (label.kind) {
        case ClusterKind::Left:
            return "left";
        case ClusterKind::Right:
            return "right";
        case ClusterKind::Black:
            return "black:" + std::to_string(label.index);
        case ClusterKind::Grey:
            return "grey:" + std::to_string(label.index);
    }
    return "?";
}

ClusterLabel parse_cluster_label(const std::string &text) {
    if (text == "left") {
        return {ClusterKind::Left, 0};
    }
    if (text == "right") {
        return {ClusterKind::Right, 0};
    }
    auto colon = text.find(':');
    if (colon != std::string::npos) {
        std::string kind = text.substr(0, colon);
        int index = 0;
        try {
            index = std::stoi(text.substr(colon + 1));
        } catch (const std::exception &) {
            throw std::invalid_argument("bad cluster label '" + text + "'");
        }
        if (kind == "black") {
            return {ClusterKind::Black, index};
        }
        if (kind == "grey") {
            return {ClusterKind::Grey, index};
        }
    }
    throw std::invalid_argument("bad cluster label '" + text + "'");
}

Instance::Instance(std::vector<double> fields, std::vector<Coupling> couplings, std::vector<ClusterLabel> labels)
    : fields_(std::move(fields)), couplings_(std::move(couplings)), labels_(std::move(labels)) {
    const int n = num_qubits();
    if (n == 0) {
        throw std::invalid_argument("instance needs at least one qubit");
    }
    if (labels_.size() != fields_.size()) {
        throw std::invalid_argument("instance: " + std::to_string(labels_.size()) + " cluster labels for " +
                                    std::to_string(n) + " qubits");
    }
    std::set<std::pair<int, int>> seen;
    for (auto &c : couplings_) {
        if (c.i == c.j) {
            throw std::invalid_argument("instance: self-coupling on qubit " + std::to_string(c.i));
        }
        if (c.i < 0 || c.j < 0 || c.i >= n || c.j >= n) {
            throw std::invalid_argument("instance: coupling index out of range");
        }
        if (c.i > c.j) {
            std::swap(c.i, c.j);
        }
        if (!seen.insert({c.i, c.j}).second) {
            throw std::invalid_argument("instance: duplicate coupling (" + std::to_string(c.i) + ", " +
                                        std::to_string(c.j) + ")");
        }
    }
    std::vector<std::size_t> degree(n, 0);
    for (const auto &c : couplings_) {
        ++degree[c.i];
        ++degree[c.j];
    }
    offsets_.assign(n + 1, 0);
    for (int q = 0; q < n; ++q) {
        offsets_[q + 1] = offsets_[q] + degree[q];
    }
    adjacency_.resize(offsets_[n]);
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto &c : couplings_) {
        adjacency_[fill[c.i]++] = {c.j, c.value};
        adjacency_[fill[c.j]++] = {c.i, c.value};
    }
}

std::vector<int> Instance::qubits_with(ClusterKind kind, int index) const {
    std::vector<int> out;
    for (int q = 0; q < num_qubits(); ++q) {
        const auto &l = labels_[q];
        bool indexed = kind == ClusterKind::Black || kind == ClusterKind::Grey;
        if (l.kind == kind && (!indexed || l.index == index)) {
            out.push_back(q);
        }
    }
    return out;
}

std::string Instance::hash() const {
    return util::sha256_hex(instance_to_json(*this));
}

double energy(const Instance &instance, std::span<const std::int8_t> spins) {
    if (static_cast<int>(spins.size()) != instance.num_qubits()) {
        throw std::invalid_argument("energy: spin vector has length " + std::to_string(spins.size()) +
                                    ", instance has " + std::to_string(instance.num_qubits()) + " qubits");
    }
    double e = 0.0;
    auto h = instance.fields();
    for (std::size_t q = 0; q < h.size(); ++q) {
        e -= h[q] * spins[q];
    }
    for (const auto &c : instance.couplings()) {
        e -= c.value * spins[c.i] * spins[c.j];
    }
    return e;
}

double local_field(const Instance &instance, std::span<const std::int8_t> spins, int qubit) {
    double f = instance.fields()[qubit];
    for (const auto &nb : instance.neighbors(qubit)) {
        f += nb.coupling * spins[nb.qubit];
    }
    return f;
}

namespace {

void add_cell(std::vector<Coupling> &couplings, int cell, double j) {
    int base = cell * kCellQubits;
    for (int a = 0; a < kCellHalf; ++a) {
        for (int b = kCellHalf; b < kCellQubits; ++b) {
            couplings.push_back({base + a, base + b, j});
        }
    }
}

}  // namespace

Instance build_probe(double h_left, double h_right, double coupling) {
    if (!(coupling > 0)) {
        throw std::invalid_argument("build_probe: coupling J must be positive");
    }
    if (h_left >= coupling / 2) {
        throw DegenerateInstanceError("build_probe: h_L must be below J/2 (false and global minima coincide or swap)");
    }
    if (!(h_left > 0)) {
        throw std::invalid_argument("build_probe: h_L must be positive");
    }
    std::vector<double> fields(2 * kCellQubits);
    std::vector<ClusterLabel> labels(2 * kCellQubits);
    for (int q = 0; q < kCellQubits; ++q) {
        fields[q] = h_left;
        labels[q] = {ClusterKind::Left, 0};
        fields[kCellQubits + q] = h_right;
        labels[kCellQubits + q] = {ClusterKind::Right, 0};
    }
    std::vector<Coupling> couplings;
    add_cell(couplings, 0, coupling);
    add_cell(couplings, 1, coupling);
    for (int k = kCellHalf; k < kCellQubits; ++k) {
        couplings.push_back({k, kCellQubits + k, coupling});
    }
    return Instance(std::move(fields), std::move(couplings), std::move(labels));
}

}  // namespace alab::model
