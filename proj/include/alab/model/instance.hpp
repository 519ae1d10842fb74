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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace alab::model {

enum class ClusterKind { Left, Right, Black, Grey };

struct ClusterLabel {
    ClusterKind kind = ClusterKind::Left;
    int index = 0;  // cell index for Black/Grey, 0 otherwise

    friend bool operator==(const ClusterLabel &, const ClusterLabel &) = default;
};

std::string to_string(const ClusterLabel &label);
ClusterLabel parse_cluster_label(const std::string &text);

struct Coupling {
    int i;
    int j;
    double value;
};

using Spins = std::vector<std::int8_t>;

/// Ising problem H_P = -sum_mu h_mu s_mu - sum_{mu<nu} J_{mu nu} s_mu s_nu.
///
/// Couplings are stored with i < j; the constructor rejects self-couplings, duplicate
/// pairs and out-of-range indices. A symmetric adjacency list is built once so that
/// local fields cost O(degree).
class Instance {
   public:
    Instance(std::vector<double> fields, std::vector<Coupling> couplings, std::vector<ClusterLabel> labels);

    int num_qubits() const {
        return static_cast<int>(fields_.size());
    }
    std::span<const double> fields() const {
        return fields_;
    }
    std::span<const Coupling> couplings() const {
        return couplings_;
    }
    std::span<const ClusterLabel> labels() const {
        return labels_;
    }

    struct Neighbor {
        int qubit;
        double coupling;
    };
    std::span<const Neighbor> neighbors(int qubit) const {
        return {adjacency_.data() + offsets_[qubit], adjacency_.data() + offsets_[qubit + 1]};
    }

    /// Qubits carrying the given cluster kind (and index, for Black/Grey).
    std::vector<int> qubits_with(ClusterKind kind, int index = 0) const;

    /// sha256 of the canonical JSON form.
    std::string hash() const;

   private:
    std::vector<double> fields_;
    std::vector<Coupling> couplings_;
    std::vector<ClusterLabel> labels_;
    std::vector<std::size_t> offsets_;
    std::vector<Neighbor> adjacency_;
};

/// Dimensionless Ising energy. Multiply by B(s) for GHz.
double energy(const Instance &instance, std::span<const std::int8_t> spins);

/// h_mu + sum_nu J_{mu nu} s_nu.
double local_field(const Instance &instance, std::span<const std::int8_t> spins, int qubit);

// Chimera unit cell: qubits 0..3 form the vertical half, 4..7 the horizontal half.
inline constexpr int kCellQubits = 8;
inline constexpr int kCellHalf = 4;

/// Two-cluster tunneling probe: left cell with field h_left, right cell with field h_right,
/// complete-bipartite 4x4 cells and four inter-cell couplings between matching
/// horizontal qubits. Throws DegenerateInstanceError when h_left >= J/2.
Instance build_probe(double h_left, double h_right = -1.0, double coupling = 1.0);

/// Per-cluster qubit count of the probe.
inline constexpr int kProbeClusterSize = 8;

}  // namespace alab::model
