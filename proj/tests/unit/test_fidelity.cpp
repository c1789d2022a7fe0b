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


#include "cavity/fidelity.hpp"

#include <gtest/gtest.h>

#include <random>

#include "cavity/photon_gate.hpp"
#include "oracles.hpp"

namespace cavity::fidelity {
namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

// Random table with R_{M',M} = conj(R_{M,M'}) and unit diagonal, like every physical gate table.
CoefficientTable random_hermitian(int m, std::mt19937_64 &rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    CoefficientTable t(m);
    for (int a = -m; a <= m; a += 2) {
        t.set(H(a), H(a), 1.0);
        for (int b = a + 2; b <= m; b += 2) {
            cd v{u(rng), u(rng)};
            t.set(H(a), H(b), v);
            t.set(H(b), H(a), std::conj(v));
        }
    }
    return t;
}

// Dense Choi overlap of the channel |s><s'| -> R_{M(s),M(s')} |s><s'| with the identity.
double choi_overlap(const CoefficientTable &t) {
    const int m = t.m();
    const int d = 1 << m;
    auto twice_m = [m](int s) { return m - 2 * __builtin_popcount(static_cast<unsigned>(s)); };
    Eigen::MatrixXcd choi = Eigen::MatrixXcd::Zero(d * d, d * d);
    for (int s = 0; s < d; ++s) {
        for (int sp = 0; sp < d; ++sp) {
            choi(s * d + s, sp * d + sp) = t.at(H(twice_m(s)), H(twice_m(sp))) / static_cast<double>(d);
        }
    }
    Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(d * d);
    for (int s = 0; s < d; ++s) phi(s * d + s) = 1.0 / std::sqrt(static_cast<double>(d));
    cd f = phi.dot(choi * phi);
    EXPECT_NEAR(f.imag(), 0.0, 1e-12);
    return f.real();
}

TEST(Table, RejectsUnsetAndOutOfRange) {
    CoefficientTable t(2);
    EXPECT_FALSE(t.complete());
    EXPECT_THROW(t.at(H(0), H(0)), DomainError);
    EXPECT_THROW(t.set(H(4), H(0), 1.0), DomainError);
    EXPECT_THROW(t.set(H(1), H(0), 1.0), DomainError);
    EXPECT_THROW(process_fidelity(t), DomainError);
}

TEST(ProcessFidelity, Extremes) {
    for (int m : {1, 2, 5, 12, 40}) {
        auto one = CoefficientTable::build(m, [](HalfInt, HalfInt) { return cd(1.0); });
        EXPECT_NEAR(process_fidelity(one), 1.0, 1e-13) << m;
        auto zero = CoefficientTable::build(m, [](HalfInt, HalfInt) { return cd(0.0); });
        EXPECT_NEAR(process_fidelity(zero), 0.0, 1e-15) << m;
    }
}

TEST(ProcessFidelity, MatchesDenseChoiOverlap) {
    std::mt19937_64 rng(21);
    for (int m = 1; m <= 4; ++m) {
        for (int trial = 0; trial < 5; ++trial) {
            auto t = random_hermitian(m, rng);
            EXPECT_NEAR(process_fidelity(t), choi_overlap(t), 1e-12) << "m=" << m;
        }
    }
}

TEST(ProcessFidelity, SinglePhotonTableAtThreeSpinsMatchesChoi) {
    for (double k : {0.05, 0.3, 1.0}) {
        auto t = photon_gate::coefficient_table({3, 0.7}, k);
        EXPECT_NEAR(process_fidelity(t), choi_overlap(t), 1e-12);
    }
}

TEST(ProcessFidelity, SerialAgreesWithParallel) {
    std::mt19937_64 rng(4);
    for (int m : {1, 6, 33, 120}) {
        auto t = random_hermitian(m, rng);
        EXPECT_NEAR(process_fidelity(t), serial::process_fidelity(t), 1e-12) << m;
    }
}

TEST(ProcessFidelity, NonHermitianTableIsRejected) {
    // Hermitian symmetry makes the imaginary parts cancel; a table that breaks it is refused.
    std::mt19937_64 rng(17);
    auto t = random_hermitian(5, rng);
    EXPECT_NO_THROW(process_fidelity(t));
    t.set(H(1), H(-3), t.at(H(1), H(-3)) + cd(0.0, 0.25));
    EXPECT_THROW(process_fidelity(t), DomainError);
    EXPECT_THROW(serial::process_fidelity(t), DomainError);
}

TEST(AverageFidelity, Examples) {
    EXPECT_DOUBLE_EQ(average_fidelity(1.0, 2.0), 1.0);
    EXPECT_DOUBLE_EQ(average_fidelity(0.0, 2.0), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(average_fidelity(0.5, 4.0), 3.0 / 5.0);
    EXPECT_DOUBLE_EQ(clamp_for_report(1.0 + 1e-15), 1.0);
    EXPECT_DOUBLE_EQ(clamp_for_report(-1e-15), 0.0);
}

}  // namespace
}  // namespace cavity::fidelity
