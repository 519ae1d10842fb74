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

#include "alab/spinvector/potential.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "alab/model/constants.hpp"
#include "alab/spinvector/spin_vector.hpp"
#include "alab/util/csv.hpp"
#include "alab/util/errors.hpp"

namespace alab::spinvector {

namespace {

using model::kPi;

// Two-angle restriction of sv_energy with a reusable scratch state.
class TwoAngleEnergy {
   public:
    explicit TwoAngleEnergy(const model::Instance &instance) : instance_(instance), state_(instance.num_qubits()) {
        for (int q = 0; q < instance.num_qubits(); ++q) {
            auto kind = instance.labels()[q].kind;
            if (kind == model::ClusterKind::Left) {
                left_.push_back(q);
            } else if (kind == model::ClusterKind::Right) {
                right_.push_back(q);
            } else {
                throw std::invalid_argument("effective_potential: qubit " + std::to_string(q) +
                                            " lacks a left/right cluster label");
            }
        }
    }

    double operator()(double theta_left, double theta_right, double A, double B) {
        for (int q : left_) {
            state_[q] = theta_left;
        }
        for (int q : right_) {
            state_[q] = theta_right;
        }
        return sv_energy(instance_, state_, A, B);
    }

   private:
    const model::Instance &instance_;
    std::vector<double> state_;
    std::vector<int> left_;
    std::vector<int> right_;
};

constexpr double kInvPhi = 0.6180339887498949;

double golden_section(const std::function<double(double)> &f, double lo, double hi, double tol) {
    double a = lo, b = hi;
    double c = b - kInvPhi * (b - a), d = a + kInvPhi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - kInvPhi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + kInvPhi * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

// Walks downhill from x0 on a coarse step, then refines inside the bracket.
double local_min_1d(const std::function<double(double)> &f, double x0, double tol) {
    constexpr double step = 0.02;
    double x = x0, fx = f(x);
    double right = f(x + step), left = f(x - step);
    double dir = 0.0;
    if (right < fx && right <= left) {
        dir = 1.0;
    } else if (left < fx) {
        dir = -1.0;
    }
    if (dir != 0.0) {
        for (int i = 0; i < static_cast<int>(2 * kPi / step) + 2; ++i) {
            double next = f(x + dir * step);
            if (next >= fx) {
                break;
            }
            x += dir * step;
            fx = next;
        }
    }
    return golden_section(f, x - step, x + step, tol);
}

struct Point2 {
    double left;
    double right;
};

Point2 descend(TwoAngleEnergy &energy, Point2 p, double A, double B, double tol) {
    for (int iter = 0; iter < 1000; ++iter) {
        double new_left = local_min_1d([&](double t) { return energy(t, p.right, A, B); }, p.left, tol);
        double new_right = local_min_1d([&](double t) { return energy(new_left, t, A, B); }, p.right, tol);
        double moved = std::max(std::abs(new_left - p.left), std::abs(new_right - p.right));
        p = {new_left, new_right};
        if (moved < 2 * tol) {
            break;
        }
    }
    return {wrap_angle(p.left), wrap_angle(p.right)};
}

double min_over_right(TwoAngleEnergy &energy, double theta_left, double A, double B, double tol) {
    constexpr int coarse = 64;
    double best_t = 0.0, best_v = std::numeric_limits<double>::infinity();
    for (int i = 0; i < coarse; ++i) {
        double t = -kPi + 2 * kPi * i / coarse;
        double v = energy(theta_left, t, A, B);
        if (v < best_v) {
            best_v = v;
            best_t = t;
        }
    }
    double step = 2 * kPi / coarse;
    double t = golden_section([&](double x) { return energy(theta_left, x, A, B); }, best_t - step, best_t + step, tol);
    return std::min(best_v, energy(theta_left, t, A, B));
}

bool same_side(double a, double b) {
    return (std::sin(a) >= 0) == (std::sin(b) >= 0);
}

}  // namespace

double effective_potential(const model::Instance &instance, double s, double theta_left, double theta_right,
                           const model::Schedule &schedule) {
    TwoAngleEnergy energy(instance);
    auto ab = schedule.at(s);
    return energy(theta_left, theta_right, ab.A, ab.B);
}

std::vector<double> uniform_grid(double lo, double hi, int points) {
    if (points < 2) {
        throw std::invalid_argument("uniform_grid: need at least two points");
    }
    std::vector<double> g(points);
    for (int i = 0; i < points; ++i) {
        g[i] = lo + (hi - lo) * i / (points - 1);
    }
    g.back() = hi;
    return g;
}

const MinimumPath &PotentialSurface::path(const std::string &label) const {
    for (const auto &p : paths) {
        if (p.label == label) {
            return p;
        }
    }
    throw std::out_of_range("no path labelled " + label);
}

std::string PotentialSurface::to_csv() const {
    util::CsvTable t;
    t.header = {"s", "theta_L", "V"};
    for (std::size_t i = 0; i < s_values.size(); ++i) {
        for (std::size_t j = 0; j < theta_values.size(); ++j) {
            t.rows.push_back({util::format_number(s_values[i]), util::format_number(theta_values[j]),
                              util::format_number(values[i * theta_values.size() + j])});
        }
    }
    return util::to_csv(t);
}

std::string PotentialSurface::paths_csv() const {
    util::CsvTable t;
    t.header = {"label", "s", "theta_L", "theta_R", "V"};
    for (const auto &p : paths) {
        for (const auto &pt : p.points) {
            t.rows.push_back({p.label, util::format_number(pt.s), util::format_number(pt.theta_left),
                              util::format_number(pt.theta_right), util::format_number(pt.value)});
        }
    }
    return util::to_csv(t);
}

PotentialSurface trace_minima(const model::Instance &instance, const model::Schedule &schedule,
                              std::span<const double> s_grid, const TraceOptions &options) {
    if (s_grid.size() < 3) {
        throw GridResolutionError("trace_minima: need at least three s points");
    }
    for (std::size_t i = 1; i < s_grid.size(); ++i) {
        if (!(s_grid[i] > s_grid[i - 1])) {
            throw std::invalid_argument("trace_minima: s grid must be increasing");
        }
    }
    TwoAngleEnergy energy(instance);
    const double tol = options.tolerance;

    PotentialSurface out;
    out.s_values.assign(s_grid.begin(), s_grid.end());
    MinimumPath initial{"initial", {}};
    MinimumPath second{"second", {}};
    bool second_alive = false;

    Point2 followed{0.0, 0.0};
    Point2 other{0.0, 0.0};
    for (double s : s_grid) {
        auto ab = schedule.at(s);
        Point2 next = descend(energy, followed, ab.A, ab.B, tol);
        if (!initial.points.empty() &&
            std::max(std::abs(next.left - followed.left), std::abs(next.right - followed.right)) > options.max_step) {
            throw GridResolutionError("trace_minima: followed minimum jumped at s=" + std::to_string(s) +
                                      "; refine the s grid");
        }
        followed = next;
        double v_followed = energy(followed.left, followed.right, ab.A, ab.B);
        initial.points.push_back({s, followed.left, followed.right, v_followed});

        if (second_alive) {
            Point2 moved = descend(energy, other, ab.A, ab.B, tol);
            if (same_side(moved.left, followed.left)) {
                second_alive = false;  // merged back into the followed basin
            } else {
                other = moved;
            }
        }
        if (!second_alive) {
            // Scan theta_L on the circle with theta_R held at the followed minimum.
            const int m = options.scan_points;
            std::vector<double> v(m);
            for (int i = 0; i < m; ++i) {
                v[i] = energy(-kPi + 2 * kPi * i / m, followed.right, ab.A, ab.B);
            }
            for (int i = 0; i < m && !second_alive; ++i) {
                double t = -kPi + 2 * kPi * i / m;
                if (v[i] > v[(i + m - 1) % m] || v[i] > v[(i + 1) % m] || same_side(t, followed.left)) {
                    continue;
                }
                Point2 candidate = descend(energy, {t, followed.right}, ab.A, ab.B, tol);
                bool distinct = !same_side(candidate.left, followed.left) &&
                                std::abs(candidate.left - followed.left) > 1e-3 &&
                                std::abs(candidate.left) <= kPi / 2 + 1e-3;
                if (distinct) {
                    second_alive = true;
                    other = candidate;
                    if (!out.bifurcation_s) {
                        out.bifurcation_s = s;
                    }
                }
            }
        }
        if (second_alive) {
            double v_other = energy(other.left, other.right, ab.A, ab.B);
            second.points.push_back({s, other.left, other.right, v_other});
            if (!out.crossover_s && v_other < v_followed) {
                out.crossover_s = s;
            }
        }
    }
    out.paths.push_back(std::move(initial));
    if (!second.points.empty()) {
        out.paths.push_back(std::move(second));
    }

    if (options.include_surface) {
        out.theta_values = uniform_grid(-kPi / 2, kPi / 2, options.theta_points);
        out.values.resize(out.s_values.size() * out.theta_values.size());
        for (std::size_t i = 0; i < out.s_values.size(); ++i) {
            auto ab = schedule.at(out.s_values[i]);
            for (std::size_t j = 0; j < out.theta_values.size(); ++j) {
                out.values[i * out.theta_values.size() + j] =
                    min_over_right(energy, out.theta_values[j], ab.A, ab.B, tol);
            }
        }
    }
    return out;
}

}  // namespace alab::spinvector
