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

#include "cavity/noise.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <bit>
#include <cmath>

#include "cavity/sectors.hpp"

namespace cavity::noise {

namespace {

constexpr int kMaxChannelSpins = 4;

void check_p(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarization strength p must lie in [0, 1]");
    }
}

void check_register(const Eigen::MatrixXcd &rho, int m_sub) {
    if (m_sub < 1 || m_sub > kMaxChannelSpins) {
        throw CapabilityError("dense channels support 1 <= m_sub <= 4");
    }
    auto d = Eigen::Index{1} << m_sub;
    if (rho.rows() != d || rho.cols() != d) {
        throw DomainError("operator dimension does not match m_sub");
    }
}

}  // namespace

DepolarizationParams DepolarizationParams::collective(double gamma, double t) {
    DepolarizationParams d;
    d.gamma = gamma;
    d.gamma_eff = gamma;
    d.p = -std::expm1(-gamma * t);
    d.validate();
    return d;
}

DepolarizationParams DepolarizationParams::independent(double gamma, double n_bar, double g_over_delta, double t) {
    DepolarizationParams d;
    d.gamma = gamma;
    d.n_bar = n_bar;
    d.g_over_delta = g_over_delta;
    d.gamma_eff = gamma * n_bar * g_over_delta * g_over_delta;
    d.p = -std::expm1(-d.gamma_eff * t);
    d.validate();
    return d;
}

void DepolarizationParams::validate() const {
    check_p(p);
    if (gamma < 0.0 || gamma_eff < 0.0 || n_bar < 0.0) {
        throw DomainError("rates and photon number must be >= 0");
    }
}

double collective_tail(int m) {
    sectors::BigCount sum = 0;
    for (const auto &row : sectors::enumerate_sectors(m)) {
        sum += row.count * row.count;
    }
    // Exact integer; scale by 2^{-2m} in floating point.
    return std::ldexp(sum.convert_to<double>(), -2 * m);
}

double collective_fidelity(double p, int m, double f_gate) {
    check_p(p);
    return (1.0 - p) * f_gate + p * collective_tail(m);
}

IndependentBound independent_bound(double p, int m, double f_gate) {
    check_p(p);
    double mp = m * p;
    return {std::max(0.0, (1.0 - mp) * f_gate), mp <= 0.2};
}

CollectiveSpin collective_spin(int m_sub) {
    auto d = Eigen::Index{1} << m_sub;
    CollectiveSpin s{Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d), Eigen::MatrixXcd::Zero(d, d)};
    for (Eigen::Index a = 0; a < d; ++a) {
        for (int q = 0; q < m_sub; ++q) {
            Eigen::Index bit = Eigen::Index{1} << q;
            bool down = (a & bit) != 0;
            s.jz(a, a) += down ? -0.5 : 0.5;
            Eigen::Index b = a ^ bit;
            s.jx(b, a) += 0.5;
            // sigma^y |up> = i |down>, sigma^y |down> = -i |up>
            s.jy(b, a) += down ? cd{0.0, -0.5} : cd{0.0, 0.5};
        }
    }
    return s;
}

CollectiveBasis collective_basis(int m_sub) {
    if (m_sub < 1 || m_sub > kMaxChannelSpins) {
        throw CapabilityError("collective basis supports 1 <= m_sub <= 4");
    }
    CollectiveSpin s = collective_spin(m_sub);
    Eigen::MatrixXcd j2 = s.jx * s.jx + s.jy * s.jy + s.jz * s.jz;
    Eigen::MatrixXcd lower = s.jx - cd{0.0, 1.0} * s.jy;
    auto d = Eigen::Index{1} << m_sub;
    CollectiveBasis basis;
    basis.vectors.resize(d, d);
    Eigen::Index col = 0;
    for (HalfInt j : sectors::total_spins(m_sub)) {
        int down = (m_sub - j.twice()) / 2;
        std::vector<Eigen::Index> states;
        for (Eigen::Index a = 0; a < d; ++a) {
            if (std::popcount(static_cast<unsigned>(a)) == down) {
                states.push_back(a);
            }
        }
        auto n = static_cast<Eigen::Index>(states.size());
        Eigen::MatrixXcd block(n, n);
        for (Eigen::Index r = 0; r < n; ++r) {
            for (Eigen::Index c = 0; c < n; ++c) {
                block(r, c) = j2(states[r], states[c]);
            }
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(block);
        double target = j.value() * (j.value() + 1.0);
        int copy = 0;
        for (Eigen::Index e = 0; e < n; ++e) {
            if (std::abs(eig.eigenvalues()(e) - target) > 1e-8) {
                continue;
            }
            Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
            for (Eigen::Index r = 0; r < n; ++r) {
                v(states[r]) = eig.eigenvectors()(r, e);
            }
            for (int tm = j.twice(); tm >= -j.twice(); tm -= 2) {
                basis.vectors.col(col) = v;
                basis.j.push_back(j);
                basis.mj.push_back(HalfInt::from_twice(tm));
                basis.copy.push_back(copy);
                ++col;
                v = lower * v;
                if (v.norm() > 0.0) {
                    v /= v.norm();
                }
            }
            ++copy;
        }
    }
    if (col != d) {
        throw std::logic_error("collective basis construction is incomplete");
    }
    return basis;
}

Eigen::MatrixXcd apply_collective(const Eigen::MatrixXcd &rho, int m_sub, double p) {
    check_p(p);
    check_register(rho, m_sub);
    CollectiveBasis b = collective_basis(m_sub);
    Eigen::MatrixXcd r = b.vectors.adjoint() * rho * b.vectors;
    const auto d = r.rows();
    Eigen::MatrixXcd twirled = Eigen::MatrixXcd::Zero(d, d);
    for (Eigen::Index x = 0; x < d; ++x) {
        for (Eigen::Index y = 0; y < d; ++y) {
            if (b.j[x] != b.j[y] || b.mj[x] != b.mj[y]) {
                continue;
            }
            // Average the copy-pair coherence over M.
            cd acc = 0.0;
            for (Eigen::Index u = 0; u < d; ++u) {
                if (b.j[u] != b.j[x] || b.copy[u] != b.copy[x]) {
                    continue;
                }
                for (Eigen::Index v = 0; v < d; ++v) {
                    if (b.j[v] == b.j[y] && b.copy[v] == b.copy[y] && b.mj[v] == b.mj[u]) {
                        acc += r(u, v);
                    }
                }
            }
            twirled(x, y) = acc / static_cast<double>(b.j[x].twice() + 1);
        }
    }
    Eigen::MatrixXcd t = b.vectors * twirled * b.vectors.adjoint();
    return (1.0 - p) * rho + p * t;
}

Eigen::MatrixXcd apply_independent(const Eigen::MatrixXcd &rho, int m_sub, double p) {
    check_p(p);
    check_register(rho, m_sub);
    const auto d = rho.rows();
    Eigen::MatrixXcd out = (1.0 - m_sub * p) * rho;
    for (int q = 0; q < m_sub; ++q) {
        Eigen::Index bit = Eigen::Index{1} << q;
        for (Eigen::Index a = 0; a < d; ++a) {
            for (Eigen::Index c = 0; c < d; ++c) {
                if ((a & bit) != (c & bit)) {
                    continue;
                }
                Eigen::Index a0 = a & ~bit;
                Eigen::Index c0 = c & ~bit;
                out(a, c) += 0.5 * p * (rho(a0, c0) + rho(a0 | bit, c0 | bit));
            }
        }
    }
    return out;
}

}  // namespace cavity::noise
