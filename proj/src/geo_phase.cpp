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

#include "cavity/geo_phase.hpp"

#include <array>
#include <cmath>

#include "cavity/photon_gate.hpp"

namespace cavity::geo_phase {

namespace {

constexpr cd I{0.0, 1.0};
constexpr double kTau = kPi / 2.0;
constexpr double kPhaseTol = 1e-9;

bool near_angle(double a, double b) {
    return std::abs(std::remainder(a - b, 2.0 * kPi)) < kPhaseTol;
}

void check_kappa(double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw DomainError("kappa/g must be finite and >= 0");
    }
}

int integer_parity(int n) {
    return n % 2 == 0 ? 1 : -1;
}

// Integer label used by the dephasing formula: M (m even) or (2M-1)/2 (m odd).
int shifted_label(HalfInt mj, bool m_odd) {
    if (m_odd) {
        if (mj.is_integer()) {
            throw DomainError("odd m needs half-integer M_J");
        }
        return (mj.twice() - 1) / 2;
    }
    if (!mj.is_integer()) {
        throw DomainError("even m needs integer M_J");
    }
    return mj.twice() / 2;
}

}  // namespace

FieldOp FieldOp::displacement(cd amplitude) {
    FieldOp op;
    op.kind = Kind::Displacement;
    op.amplitude = amplitude;
    return op;
}

FieldOp FieldOp::rotation(double angle, Coupler c) {
    FieldOp op;
    op.kind = Kind::Rotation;
    op.angle = angle;
    op.coupler = c;
    return op;
}

FieldOp FieldOp::interaction(double duration, int sign, Coupler c) {
    FieldOp op;
    op.kind = Kind::Interaction;
    op.duration = duration;
    op.sign = sign;
    op.coupler = c;
    return op;
}

DisplacementProduct compose_displacements(cd alpha, cd beta) {
    return {std::imag(beta * std::conj(alpha)), alpha + beta};
}

double effective_phase(cd alpha, cd beta, double theta, double c_eigenvalue) {
    double mag = std::abs(alpha) * std::abs(beta);
    if (mag == 0.0) {
        return 0.0;
    }
    double phi = std::arg(alpha) - std::arg(beta);
    return 2.0 * mag * std::sin(theta * c_eigenvalue + phi);
}

std::vector<FieldOp> loop_sequence(cd alpha, cd beta, double theta, Coupler c) {
    return {FieldOp::rotation(-theta, c), FieldOp::displacement(alpha), FieldOp::rotation(theta, c),
            FieldOp::displacement(beta),  FieldOp::rotation(-theta, c), FieldOp::displacement(-alpha),
            FieldOp::rotation(theta, c),  FieldOp::displacement(-beta)};
}

std::vector<FieldOp> controlled_displacement(cd beta) {
    return {FieldOp::rotation(-kPi, Coupler::Ancilla), FieldOp::displacement(-beta / 2.0),
            FieldOp::rotation(kPi, Coupler::Ancilla), FieldOp::displacement(beta / 2.0)};
}

double GeoGateParams::phi() const {
    return std::arg(alpha) - std::arg(beta);
}

double decay_envelope(double kappa_over_g) {
    check_kappa(kappa_over_g);
    return std::exp(-3.0 * kPi * kappa_over_g / 4.0) + std::exp(-kPi * kappa_over_g / 4.0);
}

double chi_effective(double alpha_mag, double kappa_over_g) {
    return alpha_mag * alpha_mag * decay_envelope(kappa_over_g);
}

double calibrate_amplitude(double chi, double kappa_over_g) {
    return std::sqrt(std::abs(chi) / decay_envelope(kappa_over_g));
}

namespace {

// (rotation direction sigma, dephasing sign) for the relative phase of p.
std::pair<int, int> phase_rule(const GeoGateParams &p) {
    double phi = p.phi();
    if (p.m % 2 == 0) {
        int base = integer_parity(p.m / 2);
        if (near_angle(phi, kPi / 2.0)) {
            return {base, -1};
        }
        if (near_angle(phi, -kPi / 2.0)) {
            return {-base, 1};
        }
        throw DomainError("even m requires phi = +-pi/2");
    }
    int base = -integer_parity((p.m - 1) / 2);
    if (near_angle(phi, 0.0)) {
        return {base, 1};
    }
    if (near_angle(phi, kPi)) {
        return {-base, -1};
    }
    throw DomainError("odd m requires phi in {0, pi}");
}

}  // namespace

int dephasing_sign(const GeoGateParams &p) {
    return phase_rule(p).second;
}

int rotation_direction(const GeoGateParams &p) {
    return phase_rule(p).first;
}

GeoGateParams calibrated_params(int m, double chi, double kappa_over_g) {
    if (m < 1) {
        throw DomainError("m must be >= 1");
    }
    int want = chi >= 0.0 ? 1 : -1;
    double a = calibrate_amplitude(chi, kappa_over_g);
    std::array<double, 2> phis = m % 2 == 0 ? std::array{kPi / 2.0, -kPi / 2.0} : std::array{0.0, kPi};
    for (double phi : phis) {
        GeoGateParams p{m, a * std::exp(I * phi), cd{a, 0.0}, kappa_over_g};
        if (rotation_direction(p) == want) {
            return p;
        }
    }
    throw DomainError("no phase choice realizes the requested rotation");
}

std::vector<FieldOp> gate_sequence(const GeoGateParams &p) {
    check_kappa(p.kappa_over_g);
    double shrink = std::exp(-p.kappa_over_g * kTau);
    return {FieldOp::displacement(p.alpha),          FieldOp::interaction(kTau, 1),
            FieldOp::displacement(p.beta),           FieldOp::interaction(kTau, -1),
            FieldOp::displacement(-p.alpha * shrink), FieldOp::interaction(kTau, 1),
            FieldOp::displacement(-p.beta * shrink)};
}

std::vector<FieldOp> measurement_sequence(int m) {
    if (m < 1) {
        throw DomainError("m must be >= 1");
    }
    double a = std::sqrt(kPi / 4.0);
    cd alpha = m % 2 == 0 ? cd{0.0, a} : cd{a, 0.0};
    cd beta{a, 0.0};
    using C = Coupler;
    return {FieldOp::displacement(alpha),
            FieldOp::interaction(kPi / 2.0, -1, C::Spins),
            FieldOp::interaction(kPi, -1, C::Ancilla),
            FieldOp::displacement(-beta / 2.0),
            FieldOp::interaction(kPi, 1, C::Ancilla),
            FieldOp::displacement(beta / 2.0),
            FieldOp::interaction(kPi / 2.0, 1, C::Spins),
            FieldOp::displacement(-alpha),
            FieldOp::interaction(kPi / 2.0, -1, C::Spins),
            FieldOp::interaction(kPi, -1, C::Ancilla),
            FieldOp::displacement(beta / 2.0),
            FieldOp::interaction(kPi, 1, C::Ancilla),
            FieldOp::displacement(-beta / 2.0)};
}

int measurement_sign(int m) {
    if (m < 1) {
        throw DomainError("m must be >= 1");
    }
    return m % 2 == 0 ? integer_parity(m / 2) : integer_parity((m - 1) / 2);
}

SzOutcome measure_sz_protocol(int m, double sz_expectation) {
    if (std::abs(sz_expectation) > 1.0 + 1e-12) {
        throw DomainError("<S^z_C> must lie in [-1, 1]");
    }
    double f = measurement_sign(m);
    return {0.5 * (1.0 + f * sz_expectation), 0.5 * (1.0 - f * sz_expectation)};
}

cd dephasing_factor(HalfInt mj, HalfInt mjp, double alpha_mag, double kappa_over_g, bool m_odd, int sign) {
    check_kappa(kappa_over_g);
    int a = shifted_label(mj, m_odd);
    int b = shifted_label(mjp, m_odd);
    if (a == b) {
        return 1.0;
    }
    double k = kappa_over_g;
    double x = k / 2.0;
    double d = a - b;
    double amp2 = alpha_mag * alpha_mag;
    double p = sign * (integer_parity(a) - integer_parity(b));
    double denom = d * d + x * x;
    double eh = std::exp(kPi * k / 2.0);
    double re = d * amp2 * std::exp(-kPi * k) * (1.0 + eh) * (2.0 * (1.0 - eh) * d + p * std::exp(kPi * k / 4.0) * x) /
                denom;
    double im = -p * amp2 * std::exp(-3.0 * kPi * k / 4.0) * (1.0 + eh) * x * x / denom;
    return std::exp(cd{re, im});
}

lindblad::CoherentPair propagate_sequence(HalfInt mj, HalfInt mjp, const std::vector<FieldOp> &seq,
                                          double kappa_over_g) {
    check_kappa(kappa_over_g);
    lindblad::CoherentPair st{mj, mjp, 0.0, 0.0, 1.0};
    for (const auto &op : seq) {
        if (op.coupler != Coupler::Spins) {
            throw DomainError("coherent pipeline handles spin-coupled operations only");
        }
        switch (op.kind) {
            case FieldOp::Kind::Displacement: {
                cd gam = op.amplitude;
                st.weight *= std::exp(I * std::imag(gam * std::conj(st.alpha))) *
                             std::exp(-I * std::imag(gam * std::conj(st.beta)));
                st.alpha += gam;
                st.beta += gam;
                break;
            }
            case FieldOp::Kind::Rotation:
                st.alpha *= std::exp(I * op.angle * static_cast<double>(mj.twice()));
                st.beta *= std::exp(I * op.angle * static_cast<double>(mjp.twice()));
                break;
            case FieldOp::Kind::Interaction:
                st = lindblad::coherent_weight(st, {static_cast<double>(op.sign), kappa_over_g, op.duration});
                break;
        }
    }
    return st;
}

cd dephasing_factor_composed(HalfInt mj, HalfInt mjp, const GeoGateParams &p) {
    auto st = propagate_sequence(mj, mjp, gate_sequence(p), p.kappa_over_g);
    double chi = chi_effective(std::abs(p.alpha), p.kappa_over_g) * rotation_direction(p);
    double s = photon_gate::parity_eigenvalue(p.m, mj);
    double sp = photon_gate::parity_eigenvalue(p.m, mjp);
    cd ideal = std::exp(-I * chi * s) * std::exp(I * chi * sp);
    return st.weight / ideal;
}

fidelity::CoefficientTable coefficient_table(int m, double chi, double kappa_over_g) {
    GeoGateParams p = calibrated_params(m, chi, kappa_over_g);
    double a = std::abs(p.alpha);
    int sign = dephasing_sign(p);
    bool odd = m % 2 == 1;
    return fidelity::CoefficientTable::build(
        m, [&](HalfInt x, HalfInt y) { return dephasing_factor(x, y, a, kappa_over_g, odd, sign); });
}

double process_fidelity_geo(int m, double chi, double kappa_over_g) {
    return fidelity::process_fidelity(coefficient_table(m, chi, kappa_over_g));
}

double lower_bound_geo(double chi, double kappa_over_g) {
    return 1.0 - 4.0 * kPi * chi * kappa_over_g / decay_envelope(kappa_over_g);
}

double lower_bound_geo_loose(double chi, double kappa_over_g) {
    check_kappa(kappa_over_g);
    return 1.0 - (4.0 * kPi * chi * kappa_over_g / 2.0) * (1.0 + kPi * kappa_over_g / 2.0);
}

double series_re_r_geo(HalfInt mj, HalfInt mjp, double alpha_mag, double kappa_over_g, bool m_odd, int sign) {
    check_kappa(kappa_over_g);
    int a = shifted_label(mj, m_odd);
    int b = shifted_label(mjp, m_odd);
    if (a == b) {
        return 1.0;
    }
    double x = kappa_over_g / 2.0;
    double d = a - b;
    double amp2 = alpha_mag * alpha_mag;
    double p = sign * (integer_parity(a) - integer_parity(b));
    double c1 = -4.0 * kPi * amp2 + 2.0 * amp2 * p / d;
    double c2 = 2.0 * amp2 * (2.0 * kPi * d - p) * (2.0 * kPi * amp2 * d - amp2 * p + kPi * d) / (d * d);
    return 1.0 + c1 * x + c2 * x * x;
}

std::pair<cd, cd> rotation_amplitudes(double theta_rot) {
    double a = std::sqrt(std::abs(theta_rot) / 2.0);
    if (theta_rot >= 0.0) {
        return {cd{-a, 0.0}, cd{a, 0.0}};
    }
    return {cd{a, 0.0}, cd{a, 0.0}};
}

}  // namespace cavity::geo_phase
