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

#include "alab/spectrum/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alab/util/csv.hpp"
#include "alab/util/errors.hpp"
#include "alab/util/parallel.hpp"

namespace alab::spectrum {

namespace {

constexpr double kInvPhi = 0.6180339887498949;

// Warm-started eigen solves along an s sequence.
class ProfileSolver {
   public:
    ProfileSolver(IsingOperator op, const model::Schedule &schedule, KrylovOptions options)
        : op_(std::move(op)), schedule_(schedule), options_(std::move(options)) {
        options_.k = std::max(options_.k, 2);
    }

    EigenResult solve(double s) {
        auto ab = schedule_.at(s);
        op_.set_envelope(ab.A, ab.B);
        options_.warm_start = previous_;
        EigenResult eig = lowest_eigenpairs(op_, options_);
        previous_ = eig.vectors;
        return eig;
    }

    int num_qubits() const {
        return op_.num_qubits();
    }

   private:
    IsingOperator op_;
    const model::Schedule &schedule_;
    KrylovOptions options_;
    std::vector<std::vector<double>> previous_;
};

}  // namespace

GapRow two_level_row(double s, const EigenResult &eig, int num_qubits) {
    if (eig.vectors.size() < 2) {
        throw std::invalid_argument("two_level_row: need two eigenpairs");
    }
    const auto &psi0 = eig.vectors[0];
    const auto &psi1 = eig.vectors[1];
    GapRow row;
    row.s = s;
    row.e0 = eig.energies[0];
    row.e1 = eig.energies[1];
    row.omega10 = std::max(0.0, row.e1 - row.e0);
    row.degenerate = row.omega10 < kDegenerateGapGHz;
    row.residual = std::max(eig.residuals[0], eig.residuals[1]);

    std::vector<long double> z0(num_qubits, 0.0L), z1(num_qubits, 0.0L), z01(num_qubits, 0.0L);
    for (std::size_t x = 0; x < psi0.size(); ++x) {
        long double p0 = static_cast<long double>(psi0[x]) * psi0[x];
        long double p1 = static_cast<long double>(psi1[x]) * psi1[x];
        long double c = static_cast<long double>(psi0[x]) * psi1[x];
        for (int q = 0; q < num_qubits; ++q) {
            int z = basis_spin(x, q);
            z0[q] += z * p0;
            z1[q] += z * p1;
            z01[q] += z * c;
        }
    }
    row.polarization0.resize(num_qubits);
    row.polarization1.resize(num_qubits);
    long double a = 0.0L, hd = 0.0L;
    for (int q = 0; q < num_qubits; ++q) {
        row.polarization0[q] = static_cast<double>(z0[q]);
        row.polarization1[q] = static_cast<double>(z1[q]);
        a += z01[q] * z01[q];
        long double d = z0[q] - z1[q];
        hd += d * d / 4.0L;
    }
    row.a_elem = static_cast<double>(a);
    row.hamming = std::clamp(static_cast<double>(hd), 0.0, static_cast<double>(num_qubits));
    return row;
}

std::string GapProfile::to_csv() const {
    util::CsvTable t;
    t.header = {"s", "E0", "E1", "omega10", "a_elem", "hamming"};
    for (const auto &r : rows) {
        t.rows.push_back({util::format_number(r.s), util::format_number(r.e0), util::format_number(r.e1),
                          util::format_number(r.omega10), util::format_number(r.a_elem),
                          util::format_number(r.hamming)});
    }
    return util::to_csv(t);
}

std::string GapProfile::polarizations_csv() const {
    util::CsvTable t;
    t.header = {"s", "state"};
    for (int q = 0; q < num_qubits; ++q) {
        t.header.push_back("z" + std::to_string(q));
    }
    for (const auto &r : rows) {
        for (int state = 0; state < 2; ++state) {
            std::vector<std::string> line{util::format_number(r.s), std::to_string(state)};
            const auto &pol = state == 0 ? r.polarization0 : r.polarization1;
            for (double z : pol) {
                line.push_back(util::format_number(z));
            }
            t.rows.push_back(std::move(line));
        }
    }
    return util::to_csv(t);
}

GapProfile compute_profile(const model::Instance &instance, const model::Schedule &schedule,
                           std::span<const double> s_grid, const ProfileOptions &options) {
    if (s_grid.empty()) {
        throw std::invalid_argument("compute_profile: empty s grid");
    }
    if (options.chunk < 1) {
        throw std::invalid_argument("compute_profile: chunk must be positive");
    }
    IsingOperator op(instance);
    GapProfile profile;
    profile.num_qubits = instance.num_qubits();
    profile.rows.resize(s_grid.size());
    const std::size_t chunk = options.chunk;
    const std::size_t chunks = (s_grid.size() + chunk - 1) / chunk;
    util::parallel_for(chunks, options.jobs, [&](std::size_t c) {
        ProfileSolver solver(op, schedule, options.krylov);
        for (std::size_t i = c * chunk; i < std::min(s_grid.size(), (c + 1) * chunk); ++i) {
            profile.rows[i] = two_level_row(s_grid[i], solver.solve(s_grid[i]), profile.num_qubits);
        }
    });
    return profile;
}

std::vector<double> refined_grid(std::span<const double> coarse, double s_center, double half_width, int factor) {
    std::vector<double> out;
    for (std::size_t i = 0; i < coarse.size(); ++i) {
        out.push_back(coarse[i]);
        if (i + 1 == coarse.size()) {
            break;
        }
        double a = coarse[i], b = coarse[i + 1];
        if (b >= s_center - half_width && a <= s_center + half_width) {
            for (int j = 1; j < factor; ++j) {
                out.push_back(a + (b - a) * j / factor);
            }
        }
    }
    return out;
}

GapProfile compute_profile(const model::Instance &instance, const model::Schedule &schedule,
                           const ProfileOptions &options) {
    std::vector<double> coarse(201);
    for (int i = 0; i < 201; ++i) {
        coarse[i] = i / 200.0;
    }
    GapProfile base = compute_profile(instance, schedule, coarse, options);
    auto it = std::min_element(base.rows.begin(), base.rows.end(),
                               [](const GapRow &a, const GapRow &b) { return a.omega10 < b.omega10; });
    std::vector<double> fine = refined_grid(coarse, it->s, 0.05, 10);
    std::vector<double> extra;
    std::set_difference(fine.begin(), fine.end(), coarse.begin(), coarse.end(), std::back_inserter(extra));
    GapProfile added = compute_profile(instance, schedule, extra, options);
    GapProfile merged;
    merged.num_qubits = base.num_qubits;
    std::merge(base.rows.begin(), base.rows.end(), added.rows.begin(), added.rows.end(),
               std::back_inserter(merged.rows), [](const GapRow &a, const GapRow &b) { return a.s < b.s; });
    return merged;
}

MinGap min_gap(const model::Instance &instance, const model::Schedule &schedule, int coarse_points,
               double tolerance) {
    if (coarse_points < 3) {
        throw std::invalid_argument("min_gap: need at least three coarse points");
    }
    ProfileSolver solver(IsingOperator(instance), schedule, KrylovOptions{});
    auto gap = [&](double s) {
        auto eig = solver.solve(s);
        return eig.energies[1] - eig.energies[0];
    };
    std::vector<double> s(coarse_points), omega(coarse_points);
    for (int i = 0; i < coarse_points; ++i) {
        s[i] = static_cast<double>(i) / (coarse_points - 1);
        omega[i] = gap(s[i]);
    }
    auto [lo_it, hi_it] = std::minmax_element(omega.begin(), omega.end());
    if (*hi_it - *lo_it <= 1e-12 * std::max(1.0, std::abs(*hi_it))) {
        throw DegenerateInstanceError("min_gap: flat gap profile, no minimum to locate");
    }
    const int i = static_cast<int>(lo_it - omega.begin());
    double a = s[std::max(0, i - 1)], b = s[std::min(coarse_points - 1, i + 1)];
    double best_s = s[i], best = omega[i];
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = gap(c), fd = gap(d);
    while (b - a > tolerance) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = gap(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = gap(d);
        }
    }
    double mid = 0.5 * (a + b);
    double fm = gap(mid);
    if (fm < best) {
        best = fm;
        best_s = mid;
    }
    return {best_s, best};
}

}  // namespace alab::spectrum
