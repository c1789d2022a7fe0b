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


#include "cavity/photon_gate.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "cavity/lindblad.hpp"
#include "oracles.hpp"

namespace cavity::photon_gate {
namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

constexpr cd I{0.0, 1.0};

struct DenseGate {
    Eigen::MatrixXcd out;   // unnormalized sum over both outcomes
    double p_plus = 0.0;
};

// Brute-force teleported gate: spins (x) (|0>+|1>)/sqrt2, dispersive interaction with decay for
// tau = pi/2, field measurement in the rotated basis, parity correction on the minus outcome.
DenseGate dense_gate(const Eigen::MatrixXcd &rho_spin, int m, double chi, double k) {
    auto sys = lindblad::DispersiveSystem::qubits(m, 1.0, k, 1);
    Eigen::Vector2cd y{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
    Eigen::MatrixXcd rho = oracle::kron(rho_spin, y * y.adjoint());
    lindblad::IntegratorOptions opts;
    opts.step = 1e-3;
    rho = lindblad::integrate_master(rho, sys, kPi / 2.0, opts);

    cd mu = std::pow(-I, m - 1);
    Eigen::Vector2cd phi_p{std::cos(chi), std::sin(chi) * mu};
    Eigen::Vector2cd phi_m{-std::sin(chi), std::cos(chi) * mu};
    Eigen::MatrixXcd par = oracle::parity(m);
    const int d = 1 << m;
    DenseGate g{Eigen::MatrixXcd::Zero(d, d), 0.0};
    for (int branch = 0; branch < 2; ++branch) {
        const Eigen::Vector2cd &phi = branch == 0 ? phi_p : phi_m;
        Eigen::MatrixXcd proj = oracle::kron(Eigen::MatrixXcd::Identity(d, d), phi.adjoint());
        Eigen::MatrixXcd spin = proj * rho * proj.adjoint();
        if (branch == 0) {
            g.p_plus = spin.trace().real();
        } else {
            spin = par * spin * par;
        }
        g.out += spin;
    }
    return g;
}

Eigen::MatrixXcd target_unitary(int m, double chi) {
    Eigen::MatrixXcd par = oracle::parity(m);
    Eigen::VectorXcd diag(par.rows());
    for (Eigen::Index i = 0; i < par.rows(); ++i) diag(i) = std::exp(-I * chi * par(i, i).real());
    return diag.asDiagonal();
}

TEST(Basics, ParityAndPhase) {
    EXPECT_EQ(parity_eigenvalue(3, H(3)), 1);
    EXPECT_EQ(parity_eigenvalue(3, H(1)), -1);
    EXPECT_EQ(parity_eigenvalue(4, H(-4)), 1);
    EXPECT_EQ(parity_eigenvalue(4, H(2)), -1);
    EXPECT_THROW(parity_eigenvalue(3, H(2)), DomainError);
    EXPECT_EQ(measurement_phase(1), cd(1.0));
    EXPECT_EQ(measurement_phase(2), cd(0.0, -1.0));
    EXPECT_EQ(measurement_phase(3), cd(-1.0));
    EXPECT_EQ(measurement_phase(5), cd(1.0));
}

TEST(Basics, TargetValidation) {
    EXPECT_THROW((GateTarget{0, 0.1}.validate()), DomainError);
    EXPECT_THROW((GateTarget{2, -kPi}.validate()), DomainError);
    EXPECT_NO_THROW((GateTarget{2, kPi}.validate()));
    EXPECT_THROW(q_coeff(2, H(0), H(0), 0.1, -1.0), DomainError);
}

TEST(QCoeff, IdealGateAtZeroDecay) {
    for (int m = 1; m <= 7; ++m) {
        for (double chi : {0.0, 0.3, kPi / 4.0, -1.2, kPi}) {
            for (int a = -m; a <= m; a += 2) {
                for (int b = -m; b <= m; b += 2) {
                    cd q = q_coeff(m, H(a), H(b), chi, 0.0);
                    EXPECT_NEAR(std::abs(q - v_coeff(m, H(a), H(b), chi)), 0.0, 1e-14);
                    EXPECT_NEAR(std::abs(r_coeff(m, H(a), H(b), chi, 0.0) - 1.0), 0.0, 1e-14);
                }
            }
        }
    }
}

TEST(QCoeff, MatchesDenseMasterEquation) {
    for (int m = 1; m <= 3; ++m) {
        const int d = 1 << m;
        Eigen::MatrixXcd plus = Eigen::MatrixXcd::Constant(d, d, 1.0 / d);
        for (double k : {0.1, 1.0}) {
            for (double chi : {kPi / 4.0, 0.4}) {
                DenseGate g = dense_gate(plus, m, chi, k);
                for (int s = 0; s < d; ++s) {
                    for (int sp = 0; sp < d; ++sp) {
                        HalfInt ms = H(lindblad::twice_mz(m, static_cast<std::size_t>(s)));
                        HalfInt msp = H(lindblad::twice_mz(m, static_cast<std::size_t>(sp)));
                        cd q = q_coeff(m, ms, msp, chi, k);
                        EXPECT_NEAR(std::abs(g.out(s, sp) * static_cast<double>(d) - q), 0.0, 1e-8)
                            << "m=" << m << " k=" << k << " s=" << s << " s'=" << sp;
                    }
                }
            }
        }
    }
}

TEST(QCoeff, OutcomeProbabilitiesMatchDense) {
    std::mt19937_64 rng(12);
    for (double k : {0.0, 0.2, 2.0}) {
        for (double chi : {0.1, kPi / 4.0, 1.3}) {
            Eigen::MatrixXcd rho = oracle::random_density(4, rng);
            auto p = noise_map_probabilities(chi, k, kPi / 2.0);
            EXPECT_NEAR(dense_gate(rho, 2, chi, k).p_plus, p.p_plus, 1e-8);
            EXPECT_NEAR(p.p_plus + p.p_minus, 1.0, 1e-15);
        }
    }
    EXPECT_THROW(noise_map_probabilities(0.1, -1.0, 1.0), DomainError);
}

TEST(QCoeff, NoisyChannelCommutesWithTarget) {
    std::mt19937_64 rng(31);
    const int m = 3;
    const double chi = 0.6;
    Eigen::MatrixXcd u = target_unitary(m, chi);
    for (int trial = 0; trial < 3; ++trial) {
        Eigen::MatrixXcd rho = oracle::random_density(8, rng);
        Eigen::MatrixXcd a = dense_gate(u * rho * u.adjoint(), m, chi, 0.3).out;
        Eigen::MatrixXcd b = u * dense_gate(rho, m, chi, 0.3).out * u.adjoint();
        EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(Fidelity, PerfectWithoutDecay) {
    for (int m : {1, 2, 9, 50}) {
        EXPECT_NEAR(process_fidelity_single_photon(m, 0.77, 0.0), 1.0, 1e-12);
    }
}

TEST(Fidelity, AboveLowerBoundAndDecreasing) {
    for (int m : {1, 2, 3, 8, 21}) {
        for (double chi : {kPi / 4.0, 0.2, -1.0}) {
            double prev = 1.0 + 1e-12;
            for (double k = 0.0; k <= 1.0 + 1e-9; k += 0.05) {
                double f = process_fidelity_single_photon(m, chi, k);
                EXPECT_GE(f, lower_bound_single_photon(k) - 1e-12) << "m=" << m << " chi=" << chi << " k=" << k;
                EXPECT_LE(f, prev + 1e-12);
                prev = f;
            }
        }
    }
}

TEST(Fidelity, LowerBoundExamples) {
    EXPECT_DOUBLE_EQ(lower_bound_single_photon(0.0), 1.0);
    EXPECT_NEAR(lower_bound_single_photon(0.2), 1.0 - kPi / 20.0, 1e-15);
}

TEST(Series, AgreesWithExactToThirdOrder) {
    for (int m : {2, 3, 6}) {
        for (double chi : {kPi / 4.0, 0.3, -0.9}) {
            for (int a = -m; a <= m; a += 2) {
                for (int b = -m; b <= m; b += 2) {
                    for (double k : {0.02, 0.05}) {
                        double x = k / 2.0;
                        double exact = r_coeff(m, H(a), H(b), chi, k).real();
                        double approx = series_re_r(m, H(a), H(b), chi, k);
                        EXPECT_LT(std::abs(exact - approx), 10.0 * x * x * x)
                            << "m=" << m << " M=" << a << "/2 M'=" << b << "/2 chi=" << chi << " k=" << k;
                    }
                }
            }
        }
    }
    EXPECT_THROW(series_re_r(2, H(0), H(2), 0.1, 0.5), DomainError);
}

}  // namespace
}  // namespace cavity::photon_gate
