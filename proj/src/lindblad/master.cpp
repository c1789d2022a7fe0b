// Copyright 2026 The cavity-gates Authors
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

#include <algorithm>
#include <bit>
#include <cmath>

#include "cavity/lindblad.hpp"

namespace cavity::lindblad {

namespace {

constexpr int kMaxOracleSpins = 5;

struct Generator {
    const DispersiveSystem &sys;
    std::vector<double> energy;   // g * level * n per basis index
    std::vector<int> photons;
    std::vector<double> lift;     // sqrt(n + 1), zero at the top level

    explicit Generator(const DispersiveSystem &s) : sys(s) {
        std::size_t d = s.dim();
        energy.resize(d);
        photons.resize(d);
        lift.resize(d);
        for (std::size_t lv = 0; lv < s.levels.size(); ++lv) {
            for (int n = 0; n <= s.nmax; ++n) {
                std::size_t a = s.index(lv, n);
                energy[a] = s.g * s.levels[lv] * n;
                photons[a] = n;
                lift[a] = n < s.nmax ? std::sqrt(static_cast<double>(n + 1)) : 0.0;
            }
        }
    }

    // out = -i[H, rho] + kappa (a rho a^dag - {a^dag a, rho}/2)
    void apply(const Eigen::MatrixXcd &rho, Eigen::MatrixXcd &out) const {
        const auto d = static_cast<Eigen::Index>(sys.dim());
        const double k = sys.kappa;
        for (Eigen::Index b = 0; b < d; ++b) {
            for (Eigen::Index a = 0; a < d; ++a) {
                cd v = cd{0.0, -(energy[a] - energy[b])} * rho(a, b);
                v -= 0.5 * k * (photons[a] + photons[b]) * rho(a, b);
                if (lift[a] != 0.0 && lift[b] != 0.0) {
                    v += k * lift[a] * lift[b] * rho(a + 1, b + 1);
                }
                out(a, b) = v;
            }
        }
    }
};

}  // namespace

int twice_mz(int m_sub, std::size_t s) {
    return m_sub - 2 * std::popcount(s);
}

DispersiveSystem DispersiveSystem::qubits(int m_sub, double g, double kappa, int nmax) {
    if (m_sub < 1) {
        throw DomainError("m_sub must be >= 1");
    }
    if (m_sub > kMaxOracleSpins) {
        throw CapabilityError("dense oracle supports at most 5 spins");
    }
    DispersiveSystem sys;
    sys.g = g;
    sys.kappa = kappa;
    sys.nmax = nmax;
    for (std::size_t s = 0; s < (std::size_t{1} << m_sub); ++s) {
        sys.levels.push_back(twice_mz(m_sub, s));
    }
    return sys;
}

DispersiveSystem DispersiveSystem::sector_pair(HalfInt mj, HalfInt mjp, double g, double kappa, int nmax) {
    DispersiveSystem sys;
    sys.g = g;
    sys.kappa = kappa;
    sys.nmax = nmax;
    sys.levels.push_back(mj.twice());
    if (mjp != mj) {
        sys.levels.push_back(mjp.twice());
    }
    return sys;
}

int coherent_cutoff(double max_abs) {
    return static_cast<int>(std::ceil(max_abs * max_abs + 6.0 * max_abs + 10.0));
}

Eigen::VectorXcd coherent_amplitudes(cd alpha, int nmax) {
    Eigen::VectorXcd v(nmax + 1);
    v(0) = std::exp(-0.5 * std::norm(alpha));
    for (int n = 1; n <= nmax; ++n) {
        v(n) = v(n - 1) * alpha / std::sqrt(static_cast<double>(n));
    }
    return v;
}

double top_level_population(const Eigen::MatrixXcd &rho, const DispersiveSystem &sys) {
    double pop = 0.0;
    for (std::size_t lv = 0; lv < sys.levels.size(); ++lv) {
        auto a = static_cast<Eigen::Index>(sys.index(lv, sys.nmax));
        pop += std::abs(rho(a, a));
    }
    return pop;
}

Eigen::MatrixXcd integrate_master(const Eigen::MatrixXcd &rho0, const DispersiveSystem &sys, double t,
                                  const IntegratorOptions &opts) {
    const auto d = static_cast<Eigen::Index>(sys.dim());
    if (rho0.rows() != d || rho0.cols() != d) {
        throw DomainError("initial operator does not match the system dimension");
    }
    if (sys.nmax < 1 || sys.kappa < 0.0 || t < 0.0) {
        throw DomainError("integrate_master requires nmax >= 1, kappa >= 0, t >= 0");
    }
    double h = opts.step > 0.0 ? opts.step : 1e-3 / std::max({std::abs(sys.g), sys.kappa, 1.0});
    auto steps = static_cast<long>(std::ceil(t / h - 1e-12));
    Eigen::MatrixXcd rho = rho0;
    if (steps > 0) {
        h = t / static_cast<double>(steps);
        Generator gen(sys);
        Eigen::MatrixXcd k1(d, d), k2(d, d), k3(d, d), k4(d, d), tmp(d, d);
        for (long s = 0; s < steps; ++s) {
            gen.apply(rho, k1);
            tmp = rho + (0.5 * h) * k1;
            gen.apply(tmp, k2);
            tmp = rho + (0.5 * h) * k2;
            gen.apply(tmp, k3);
            tmp = rho + h * k3;
            gen.apply(tmp, k4);
            rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    if (opts.monitor_leakage &&
        std::max(top_level_population(rho0, sys), top_level_population(rho, sys)) > opts.leakage_tol) {
        throw CapabilityError("Fock truncation leakage exceeds tolerance");
    }
    return rho;
}

}  // namespace cavity::lindblad
