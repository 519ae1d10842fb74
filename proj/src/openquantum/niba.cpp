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

#include "alab/openquantum/niba.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "alab/model/constants.hpp"
#include "alab/util/errors.hpp"

namespace alab::openquantum {

namespace {

using model::kPi;
using cplx = std::complex<double>;

constexpr int kOrder = 16;
constexpr double kLn2 = 0.6931471805599453;
constexpr double kEnvelopeCut = 1e-16;

struct Rule {
    std::array<double, kOrder> x;
    std::array<double, kOrder> w;
};

const Rule &gauss_legendre() {
    static const Rule rule = [] {
        Rule r{};
        for (int i = 0; i < kOrder; ++i) {
            double z = std::cos(kPi * (i + 0.75) / (kOrder + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = 0.0;
                for (int j = 1; j <= kOrder; ++j) {
                    double p2 = p1;
                    p1 = p0;
                    p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
                }
                dp = kOrder * (z * p0 - p1) / (z * z - 1.0);
                double dz = p0 / dp;
                z -= dz;
                if (std::abs(dz) < 1e-16) {
                    break;
                }
            }
            r.x[i] = z;
            r.w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        }
        return r;
    }();
    return rule;
}

// log(i sinh(x - i y)) on the branch with argument in (-pi/2, pi/2), 0 < y < pi.
cplx log_i_sinh(double x, double y) {
    if (x > 20.0) {
        return {x - kLn2, kPi / 2 - y};
    }
    if (x < -20.0) {
        return {-x - kLn2, y - kPi / 2};
    }
    return std::log(cplx(0.0, 1.0) * std::sinh(cplx(x, -y)));
}

struct Integrand {
    double omega;  // rad/ns, signed
    double hamming;
    double epsilon;
    double W;
    double beta;
    double tau_c;
    double alpha;  // hamming eta / 2 pi
    double log_prefix;

    cplx operator()(double tau) const {
        cplx log_f(-hamming * W * W * tau * tau / 2.0, (omega - hamming * epsilon) * tau);
        if (alpha > 0) {
            cplx log_k = log_prefix - log_i_sinh(kPi * tau / beta, kPi * tau_c / beta);
            log_f += alpha * log_k;
        }
        return std::exp(log_f);
    }
};

struct PanelSum {
    cplx value{0.0, 0.0};
    double l1 = 0.0;
};

PanelSum integrate(const Integrand &f, const std::vector<double> &edges, int split, double sign) {
    const Rule &rule = gauss_legendre();
    PanelSum out;
    for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
        double a = edges[p], b = edges[p + 1];
        double width = (b - a) / split;
        for (int k = 0; k < split; ++k) {
            double lo = a + k * width;
            double half = width / 2.0, mid = lo + half;
            for (int i = 0; i < kOrder; ++i) {
                cplx v = f(sign * (mid + half * rule.x[i]));
                out.value += half * rule.w[i] * v;
                out.l1 += half * rule.w[i] * std::abs(v);
            }
        }
    }
    return out;
}

}  // namespace

double golden_rule_rate(double a_elem, double omega10_GHz, const NoiseParams &params) {
    params.validate();
    if (a_elem < 0) {
        throw std::invalid_argument("golden_rule_rate: negative matrix element");
    }
    return a_elem * spectral_density(params, 2.0 * kPi * omega10_GHz) * 1e9;
}

bool golden_rule_valid(double omega10_GHz, const NoiseParams &params) {
    return std::abs(omega10_GHz) > params.W_GHz;
}

double niba_prefactor(double omega10_GHz, double hamming, double a_elem) {
    double omega = 2.0 * kPi * omega10_GHz;
    return a_elem * omega * omega / hamming;
}

NibaDiagnostics niba_rate_diagnostics(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params) {
    params.validate();
    if (!(hamming > 0)) {
        throw std::invalid_argument("niba_rate: Hamming distance must be positive");
    }
    if (a_elem < 0) {
        throw std::invalid_argument("niba_rate: negative matrix element");
    }
    NibaDiagnostics diag;
    diag.prefactor = niba_prefactor(omega10_GHz, hamming, a_elem);
    if (diag.prefactor == 0.0) {
        return diag;
    }

    Integrand f{2.0 * kPi * omega10_GHz,
                hamming,
                params.epsilon_angular(),
                params.W_angular(),
                params.beta_ns(),
                params.tau_c_ns(),
                hamming * params.eta / (2.0 * kPi),
                0.0};
    f.log_prefix = std::log(kPi * f.tau_c / f.beta);

    const double sigma = 1.0 / (std::sqrt(hamming) * f.W);
    const double tau_max = sigma * std::sqrt(2.0 * std::log(1.0 / kEnvelopeCut));
    const double omega_max = std::abs(f.omega) + hamming * f.epsilon + f.alpha * kPi / f.beta + 1e-12;
    const double step = std::min({kPi / omega_max, sigma / 2.0, f.beta});

    std::vector<double> edges{0.0};
    if (f.alpha > 0) {
        for (double t = f.tau_c / 8.0; t < step && t < tau_max; t *= 2.0) {
            edges.push_back(t);
        }
    }
    const double start = edges.back();
    const auto uniform = static_cast<long long>(std::ceil((tau_max - start) / step));
    if (uniform > 5'000'000) {
        throw QuadratureError("niba_rate: " + std::to_string(uniform) + " panels needed; integrand unresolvable");
    }
    for (long long i = 1; i <= uniform; ++i) {
        edges.push_back(std::min(tau_max, start + i * step));
    }
    diag.tau_max_ns = tau_max;
    diag.panels = static_cast<int>(edges.size() - 1);

    auto both = [&](int split) {
        PanelSum pos = integrate(f, edges, split, 1.0);
        PanelSum neg = integrate(f, edges, split, -1.0);
        return PanelSum{pos.value + neg.value, pos.l1 + neg.l1};
    };
    PanelSum coarse = both(1);
    PanelSum fine = both(2);
    int split = 2;
    auto settled = [](const PanelSum &a, const PanelSum &b) {
        double diff = std::abs(a.value - b.value);
        return diff <= std::max(1e-9 * std::abs(b.value.real()), 1e-13 * b.l1);
    };
    while (!settled(coarse, fine)) {
        if (split >= 64) {
            std::ostringstream msg;
            msg << "niba_rate: quadrature did not settle (omega10=" << omega10_GHz << " GHz, hamming=" << hamming
                << ", panels=" << diag.panels << ", change=" << std::abs(coarse.value - fine.value)
                << ", value=" << fine.value.real() << ")";
            throw QuadratureError(msg.str());
        }
        split *= 2;
        coarse = fine;
        fine = both(split);
        ++diag.refinements;
    }
    diag.integral_real = fine.value.real();
    diag.integral_imag = fine.value.imag();
    const double floor = 1e-13 * fine.l1;
    if (std::abs(diag.integral_imag) > std::max(1e-6 * std::abs(diag.integral_real), floor)) {
        std::ostringstream msg;
        msg << "niba_rate: imaginary residue " << diag.integral_imag << " against real part " << diag.integral_real;
        throw QuadratureError(msg.str());
    }
    if (diag.integral_real < -floor) {
        std::ostringstream msg;
        msg << "niba_rate: negative integral " << diag.integral_real;
        throw QuadratureError(msg.str());
    }
    diag.rate = diag.prefactor * std::max(0.0, diag.integral_real) * 1e9;
    return diag;
}

double niba_rate(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params) {
    return niba_rate_diagnostics(omega10_GHz, hamming, a_elem, params).rate;
}

double niba_gaussian_rate(double omega10_GHz, double hamming, double a_elem, const NoiseParams &params) {
    params.validate();
    if (!(hamming > 0)) {
        throw std::invalid_argument("niba_gaussian_rate: Hamming distance must be positive");
    }
    const double omega = 2.0 * kPi * omega10_GHz;
    const double var = hamming * params.W_angular() * params.W_angular();
    const double detune = omega - hamming * params.epsilon_angular();
    return niba_prefactor(omega10_GHz, hamming, a_elem) * std::sqrt(2.0 * kPi / var) *
           std::exp(-detune * detune / (2.0 * var)) * 1e9;
}

}  // namespace alab::openquantum
