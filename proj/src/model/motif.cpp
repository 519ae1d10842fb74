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

#include "alab/model/motif.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>
#include <tuple>

#include "alab/util/errors.hpp"
#include "alab/util/rng.hpp"

namespace alab::model {

MotifSpec MotifSpec::for_size(int n_qubits, std::uint64_t glass_seed) {
    if (n_qubits < 2 * kCellQubits || n_qubits % kCellQubits != 0) {
        throw std::invalid_argument("motif size must be a multiple of 8 and at least 16 qubits");
    }
    int cells = n_qubits / kCellQubits;
    MotifSpec spec;
    spec.n_black_cells = (cells + 1) / 2;
    spec.n_grey_cells = cells / 2;
    spec.glass_seed = glass_seed;
    return spec;
}

namespace {

struct Cell {
    int row;
    int col;
    bool black;
    int ordinal;       // black index or grey index
    int parent = -1;   // grey: black ordinal it hangs from
    bool horizontal_link = false;
};

struct Direction {
    int dr;
    int dc;
    bool horizontal;
};

constexpr Direction kWest{0, -1, true};
constexpr Direction kEast{0, 1, true};
constexpr Direction kNorth{-1, 0, false};
constexpr Direction kSouth{1, 0, false};

// Couples the matching half of two cells; horizontal neighbours share qubits 4..7,
// vertical neighbours qubits 0..3 (Chimera inter-cell wiring).
void link_cells(std::vector<Coupling> &couplings, int cell_a, int cell_b, bool horizontal,
                const std::function<double()> &value) {
    int offset = horizontal ? kCellHalf : 0;
    for (int k = 0; k < kCellHalf; ++k) {
        couplings.push_back({cell_a * kCellQubits + offset + k, cell_b * kCellQubits + offset + k, value()});
    }
}

}  // namespace

Instance generate_motif_glass(const MotifSpec &spec) {
    if (spec.n_black_cells < 1 || spec.n_grey_cells < 0) {
        throw std::invalid_argument("motif: need at least one black cell");
    }
    if (spec.n_grey_cells > spec.n_black_cells) {
        throw std::invalid_argument("motif: more grey cells than black cells");
    }
    int rows = spec.rows;
    int cols = spec.cols;
    if (rows <= 0 && cols <= 0) {
        cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(spec.n_black_cells))));
        rows = (spec.n_black_cells + cols - 1) / cols;
    } else if (rows <= 0) {
        rows = (spec.n_black_cells + cols - 1) / cols;
    } else if (cols <= 0) {
        cols = (spec.n_black_cells + rows - 1) / rows;
    }
    if (rows * cols < spec.n_black_cells) {
        throw std::invalid_argument("motif: layout " + std::to_string(rows) + "x" + std::to_string(cols) +
                                    " cannot hold " + std::to_string(spec.n_black_cells) + " black cells");
    }

    std::vector<Cell> cells;
    std::map<std::pair<int, int>, int> occupied;  // position -> index into cells
    for (int b = 0; b < spec.n_black_cells; ++b) {
        Cell c{b / cols, b % cols, true, b};
        occupied[{c.row, c.col}] = static_cast<int>(cells.size());
        cells.push_back(c);
    }

    // Grey cells go round-robin over the black cells, alternating which side is tried
    // first, until all are placed or no black cell has a free neighbouring site.
    int placed = 0;
    while (placed < spec.n_grey_cells) {
        bool progress = false;
        for (int b = 0; b < spec.n_black_cells && placed < spec.n_grey_cells; ++b) {
            const Cell host = cells[b];
            std::array<Direction, 4> order = (b % 2 == 0) ? std::array<Direction, 4>{kWest, kNorth, kSouth, kEast}
                                                          : std::array<Direction, 4>{kEast, kSouth, kNorth, kWest};
            for (const auto &d : order) {
                std::pair<int, int> site{host.row + d.dr, host.col + d.dc};
                if (occupied.count(site)) {
                    continue;
                }
                Cell g{site.first, site.second, false, placed, b, d.horizontal};
                occupied[site] = static_cast<int>(cells.size());
                cells.push_back(g);
                ++placed;
                progress = true;
                break;
            }
        }
        if (!progress) {
            throw std::invalid_argument("motif: grey cell " + std::to_string(placed) +
                                        " has no free site next to a black cell");
        }
    }

    // Cell numbering follows grid position, row-major.
    std::vector<int> order(cells.size());
    for (std::size_t i = 0; i < cells.size(); ++i) {
        order[i] = static_cast<int>(i);
    }
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::tie(cells[a].row, cells[a].col) < std::tie(cells[b].row, cells[b].col);
    });
    std::vector<int> cell_id(cells.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        cell_id[order[k]] = static_cast<int>(k);
    }

    const int n = spec.num_qubits();
    std::vector<double> fields(n);
    std::vector<ClusterLabel> labels(n);
    std::vector<Coupling> couplings;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        const Cell &c = cells[i];
        int id = cell_id[i];
        for (int q = 0; q < kCellQubits; ++q) {
            fields[id * kCellQubits + q] = c.black ? spec.h_strong : spec.h_weak;
            labels[id * kCellQubits + q] = {c.black ? ClusterKind::Black : ClusterKind::Grey, c.ordinal};
        }
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
        int cell = static_cast<int>(k);
        int base = cell * kCellQubits;
        for (int a = 0; a < kCellHalf; ++a) {
            for (int b = kCellHalf; b < kCellQubits; ++b) {
                couplings.push_back({base + a, base + b, 1.0});
            }
        }
    }

    auto rng = util::derived_stream(spec.glass_seed, 0, 0x6c617373ULL);
    auto random_sign = [&rng]() { return (rng() >> 63) ? 1.0 : -1.0; };
    auto ferro = []() { return 1.0; };
    for (int b = 0; b < spec.n_black_cells; ++b) {
        const Cell &c = cells[b];
        for (const auto &d : {kEast, kSouth}) {
            auto it = occupied.find({c.row + d.dr, c.col + d.dc});
            if (it == occupied.end() || !cells[it->second].black) {
                continue;
            }
            link_cells(couplings, cell_id[b], cell_id[it->second], d.horizontal, random_sign);
        }
    }
    for (std::size_t i = spec.n_black_cells; i < cells.size(); ++i) {
        const Cell &g = cells[i];
        int a = cell_id[i];
        int b = cell_id[g.parent];
        link_cells(couplings, std::min(a, b), std::max(a, b), g.horizontal_link, ferro);
    }
    return Instance(std::move(fields), std::move(couplings), std::move(labels));
}

}  // namespace alab::model
