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

#include "alab/spectrum/krylov.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "alab/util/errors.hpp"
#include "alab/util/rng.hpp"

namespace alab::spectrum {

namespace {

constexpr std::uint64_t kStreamTag = 0x6c616e637a6f73ULL;

double dot(const double *a, const double *b, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        s += a[i] * b[i];
    }
    return s;
}

void axpy(double alpha, const double *x, double *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

double norm(const double *a, std::size_t n) {
    return std::sqrt(dot(a, a, n));
}

using ColMap = Eigen::Map<const Eigen::MatrixXd>;
using VecMap = Eigen::Map<Eigen::VectorXd>;

// Two passes of classical Gram-Schmidt against the first `count` columns.
void orthogonalize(const std::vector<double> &basis, int count, std::size_t n, double *w, double *coef) {
    ColMap V(basis.data(), static_cast<Eigen::Index>(n), count);
    VecMap wv(w, static_cast<Eigen::Index>(n));
    VecMap c(coef, count);
    c.setZero();
    for (int pass = 0; pass < 2; ++pass) {
        Eigen::VectorXd h = V.transpose() * wv;
        wv.noalias() -= V * h;
        c += h;
    }
}

void random_fill(std::mt19937_64 &rng, double *w, std::size_t n, double scale) {
    for (std::size_t i = 0; i < n; ++i) {
        w[i] += scale * (2.0 * util::uniform01(rng) - 1.0);
    }
}

// Replaces w with a random unit vector orthogonal to the basis; false when the space is exhausted.
bool fresh_direction(std::mt19937_64 &rng, const std::vector<double> &basis, int count, std::size_t n, double *w,
                     std::vector<double> &scratch) {
    for (int attempt = 0; attempt < 4; ++attempt) {
        std::fill(w, w + n, 0.0);
        random_fill(rng, w, n, 1.0);
        double before = norm(w, n);
        orthogonalize(basis, count, n, w, scratch.data());
        double after = norm(w, n);
        if (after > 1e-8 * before) {
            for (std::size_t i = 0; i < n; ++i) {
                w[i] /= after;
            }
            return true;
        }
    }
    return false;
}

}  // namespace

void fix_phase(std::vector<double> &v) {
    std::size_t best = 0;
    double mag = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::abs(v[i]) > mag) {
            mag = std::abs(v[i]);
            best = i;
        }
    }
    if (!v.empty() && v[best] < 0) {
        for (double &x : v) {
            x = -x;
        }
    }
}

EigenResult lowest_eigenpairs(const IsingOperator &op, const KrylovOptions &options) {
    const std::size_t n = op.dimension();
    const int k = options.k;
    if (k < 1 || k > 6) {
        throw std::invalid_argument("lowest_eigenpairs: k must lie in [1, 6]");
    }
    if (static_cast<std::size_t>(k) > n) {
        throw std::invalid_argument("lowest_eigenpairs: k exceeds the Hilbert-space dimension");
    }
    const int m = static_cast<int>(std::min<std::size_t>(std::max(options.max_basis, k + 2), n));
    const int keep = std::min(m - 1, k + std::max(2, (m - k) / 3));
    const double scale = op.norm_bound() > 0 ? op.norm_bound() : 1.0;
    auto rng = util::derived_stream(options.seed, 0, kStreamTag);

    EigenResult result;
    result.norm_bound = op.norm_bound();

    std::vector<double> basis(static_cast<std::size_t>(m) * n, 0.0);
    std::vector<double> w(n), r(n), coef(m);
    auto col = [&](int j) { return basis.data() + static_cast<std::size_t>(j) * n; };

    // Start vector.
    double *v0 = col(0);
    if (!options.warm_start.empty()) {
        for (const auto &prev : options.warm_start) {
            if (prev.size() != n) {
                throw std::invalid_argument("lowest_eigenpairs: warm-start vector has the wrong dimension");
            }
            axpy(1.0, prev.data(), v0, n);
        }
        random_fill(rng, v0, n, 1e-6 / std::sqrt(static_cast<double>(n)));
    } else {
        random_fill(rng, v0, n, 1.0);
    }
    double nv = norm(v0, n);
    if (!(nv > 0)) {
        throw std::invalid_argument("lowest_eigenpairs: zero start vector");
    }
    for (std::size_t i = 0; i < n; ++i) {
        v0[i] /= nv;
    }

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(m, m);
    int kept = 0;
    double best_estimate = std::numeric_limits<double>::infinity();
    int since_improvement = 0;
    double last_explicit = std::numeric_limits<double>::infinity();

    for (int restart = 0; restart <= options.max_restarts; ++restart) {
        int used = m;
        double beta_last = 0.0;
        for (int j = kept; j < m; ++j) {
            op.apply(std::span<const double>(col(j), n), w);
            ++result.matvecs;
            orthogonalize(basis, j + 1, n, w.data(), coef.data());
            T(j, j) = coef[j];
            double beta = norm(w.data(), n);
            if (j + 1 < m) {
                if (beta > 1e-12 * scale) {
                    double *next = col(j + 1);
                    for (std::size_t i = 0; i < n; ++i) {
                        next[i] = w[i] / beta;
                    }
                    T(j, j + 1) = T(j + 1, j) = beta;
                } else if (fresh_direction(rng, basis, j + 1, n, col(j + 1), coef)) {
                    T(j, j + 1) = T(j + 1, j) = 0.0;
                } else {
                    used = j + 1;
                    break;
                }
            } else {
                beta_last = beta;
                if (beta > 0) {
                    for (std::size_t i = 0; i < n; ++i) {
                        r[i] = w[i] / beta;
                    }
                }
            }
        }

        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(T.topLeftCorner(used, used));
        const Eigen::VectorXd &theta = solver.eigenvalues();
        const Eigen::MatrixXd &Y = solver.eigenvectors();
        double estimate = 0.0;
        for (int i = 0; i < k; ++i) {
            estimate = std::max(estimate, std::abs(beta_last * Y(used - 1, i)));
        }
        if (estimate < 0.5 * best_estimate) {
            best_estimate = estimate;
            since_improvement = 0;
        } else {
            ++since_improvement;
        }
        bool converged = estimate <= options.tolerance * scale;
        bool stalled = since_improvement >= 25;
        bool last = restart == options.max_restarts;

        const int ritz_count = std::min(std::max(keep, k), used);
        std::vector<double> ritz(static_cast<std::size_t>(ritz_count) * n, 0.0);
        auto compute_ritz = [&](int count) {
            ColMap V(basis.data(), static_cast<Eigen::Index>(n), used);
            Eigen::Map<Eigen::MatrixXd> X(ritz.data(), static_cast<Eigen::Index>(n), count);
            X.noalias() = V * Y.topLeftCorner(used, count);
        };

        if (converged || stalled || last || used < m) {
            compute_ritz(k);
            EigenResult trial = result;
            trial.restarts = restart;
            double worst = 0.0;
            for (int i = 0; i < k; ++i) {
                std::vector<double> x(ritz.begin() + static_cast<std::ptrdiff_t>(i) * n,
                                      ritz.begin() + static_cast<std::ptrdiff_t>(i + 1) * n);
                double nx = norm(x.data(), n);
                for (double &a : x) {
                    a /= nx;
                }
                fix_phase(x);
                op.apply(x, w);
                ++trial.matvecs;
                double e = dot(x.data(), w.data(), n);
                axpy(-e, x.data(), w.data(), n);
                double res = norm(w.data(), n);
                worst = std::max(worst, res);
                trial.energies.push_back(e);
                trial.vectors.push_back(std::move(x));
                trial.residuals.push_back(res);
            }
            result.matvecs = trial.matvecs;
            last_explicit = worst;
            if (worst <= options.guaranteed_residual * scale && (converged || stalled || used < m)) {
                return trial;
            }
            if (last) {
                break;
            }
        }

        // Thick restart: keep `keep` Ritz vectors plus the residual direction.
        const int p = std::min(keep, used - 1);
        compute_ritz(p);
        std::copy(ritz.begin(), ritz.begin() + static_cast<std::ptrdiff_t>(p) * n, basis.begin());
        T.setZero();
        for (int i = 0; i < p; ++i) {
            T(i, i) = theta(i);
        }
        if (beta_last > 1e-12 * scale) {
            std::copy(r.begin(), r.end(), col(p));
            for (int i = 0; i < p; ++i) {
                T(i, p) = T(p, i) = beta_last * Y(used - 1, i);
            }
        } else if (!fresh_direction(rng, basis, p, n, col(p), coef)) {
            break;
        }
        kept = p;
    }
    throw ConvergenceError("lowest_eigenpairs: no convergence within " + std::to_string(options.max_restarts) +
                               " restarts",
                           last_explicit);
}

EigenResult lowest_eigenpairs(const model::Instance &instance, double s, const model::Schedule &schedule, int k) {
    IsingOperator op(instance);
    auto ab = schedule.at(s);
    op.set_envelope(ab.A, ab.B);
    KrylovOptions options;
    options.k = k;
    return lowest_eigenpairs(op, options);
}

}  // namespace alab::spectrum
