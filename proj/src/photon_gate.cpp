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

#include <cmath>

#include "cavity/lindblad.hpp"

namespace cavity::photon_gate {

namespace {

constexpr cd I{0.0, 1.0};
constexpr double kTau = kPi / 2.0;
constexpr double kSeriesMaxKappa = 0.3;

void check_projection(int m, HalfInt mj) {
    if (m < 1 || (m - mj.twice()) % 2 != 0 || mj.twice() < -m || mj.twice() > m) {
        throw DomainError("M_J=" + mj.str() + " is not a projection for m=" + std::to_string(m));
    }
}

}  // namespace

void GateTarget::validate() const {
    if (m < 1) {
        throw DomainError("m must be >= 1");
    }
    if (!(chi > -kPi && chi <= kPi)) {
        throw DomainError("chi must lie in (-pi, pi]");
    }
}

int parity_eigenvalue(int m, HalfInt mj) {
    check_projection(m, mj);
    int down = (m - mj.twice()) / 2;
    return down % 2 == 0 ? 1 : -1;
}

cd measurement_phase(int m) {
    static constexpr cd kPowers[4] = {{1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
    return kPowers[(m - 1) % 4];
}

cd v_coeff(int m, HalfInt mj, HalfInt mjp, double chi) {
    double s = parity_eigenvalue(m, mj);
    double sp = parity_eigenvalue(m, mjp);
    return std::exp(-I * chi * s) * std::exp(I * chi * sp);
}

cd q_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g) {
    if (kappa_over_g < 0.0) {
        throw DomainError("kappa/g must be >= 0");
    }
    double s = parity_eigenvalue(m, mj);
    double sp = parity_eigenvalue(m, mjp);
    lindblad::DecayParams p{1.0, kappa_over_g, kTau};
    cd b = lindblad::b_coeff(p, mj, mjp);
    double eps = std::exp(-kappa_over_g * kTau / 2.0);
    // Field amplitudes of the |1> branch after the interaction and the basis phase.
    cd z = -I * s;
    cd zp = I * sp;
    double c = std::cos(chi);
    double sn = std::sin(chi);
    double w = s * sp;
    cd plus = c * c * (1.0 + b) + c * sn * eps * (z + zp) + sn * sn * eps * eps * z * zp;
    cd minus = sn * sn * (1.0 + b) - c * sn * eps * (z + zp) + c * c * eps * eps * z * zp;
    return 0.5 * (plus + w * minus);
}

cd r_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g) {
    return q_coeff(m, mj, mjp, chi, kappa_over_g) * std::conj(v_coeff(m, mj, mjp, chi));
}

OutcomeProbabilities noise_map_probabilities(double theta_plus, double kappa, double tau) {
    if (kappa < 0.0 || tau < 0.0) {
        throw DomainError("kappa and tau must be >= 0");
    }
    double diff = -std::expm1(-kappa * tau) * std::cos(2.0 * theta_plus);
    return {0.5 * (1.0 + diff), 0.5 * (1.0 - diff)};
}

fidelity::CoefficientTable coefficient_table(const GateTarget &target, double kappa_over_g) {
    target.validate();
    return fidelity::CoefficientTable::build(target.m, [&](HalfInt a, HalfInt b) {
        return r_coeff(target.m, a, b, target.chi, kappa_over_g);
    });
}

double process_fidelity_single_photon(int m, double chi, double kappa_over_g) {
    return fidelity::process_fidelity(coefficient_table({m, chi}, kappa_over_g));
}

double lower_bound_single_photon(double kappa_over_g) {
    if (kappa_over_g < 0.0) {
        throw DomainError("kappa/g must be >= 0");
    }
    return 1.0 - (kPi / 2.0) * (kappa_over_g / 2.0);
}

double series_re_r(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g) {
    if (kappa_over_g < 0.0 || kappa_over_g > kSeriesMaxKappa) {
        throw DomainError("series expansion valid only for 0 <= kappa/g <= 0.3");
    }
    check_projection(m, mj);
    check_projection(m, mjp);
    if (mj == mjp) {
        return 1.0;
    }
    double x = kappa_over_g / 2.0;
    int diff2 = (mj - mjp).twice();
    if ((diff2 / 2) % 2 == 0) {
        return 1.0 - (kPi / 2.0) * x + (kPi * kPi / 4.0) * x * x;
    }
    double d = 0.5 * diff2;
    double sg = -parity_eigenvalue(m, mj);
    double s4 = std::sin(4.0 * chi);
    double c4 = std::cos(4.0 * chi);
    double first = kPi / 2.0 + sg * s4 / (2.0 * d);
    double second = sg * kPi * s4 / (4.0 * d) + (c4 + 1.0) / (2.0 * d * d) + kPi * kPi * (3.0 + c4) / 16.0;
    return 1.0 - first * x + second * x * x;
}

}  // namespace cavity::photon_gate
