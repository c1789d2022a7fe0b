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

#ifndef CAVITY_GEO_PHASE_HPP
#define CAVITY_GEO_PHASE_HPP

#include <vector>

#include "cavity/common.hpp"
#include "cavity/fidelity.hpp"
#include "cavity/lindblad.hpp"

namespace cavity::geo_phase {

// Units: |g| = 1, interaction legs last tau = pi/2.

/// Which operator multiplies a^dag a in a rotation or interaction.
///   Spins   - X = 2 J^z
///   Ancilla - X = |1><1|_A
enum class Coupler { Spins, Ancilla };

struct FieldOp {
    enum class Kind { Displacement, Rotation, Interaction };

    Kind kind = Kind::Displacement;
    cd amplitude{0.0};  // Displacement: D(amplitude)
    double angle = 0.0;  // Rotation: exp(i angle a^dag a X)
    double duration = 0.0;  // Interaction: exp(-i sign g duration a^dag a X), with cavity decay
    int sign = 1;
    Coupler coupler = Coupler::Spins;

    static FieldOp displacement(cd amplitude);
    static FieldOp rotation(double angle, Coupler c = Coupler::Spins);
    static FieldOp interaction(double duration, int sign, Coupler c = Coupler::Spins);
};

/// D(beta) D(alpha) = e^{i phase} D(alpha + beta).
struct DisplacementProduct {
    double phase;
    cd amplitude;
};
DisplacementProduct compose_displacements(cd alpha, cd beta);

/// Phase theta such that the loop D(-beta) D(-alpha e^{i theta c}) D(beta) D(alpha e^{i theta c})
/// equals e^{-i theta}: 2 |alpha beta| sin(theta c + phi), phi = arg(alpha) - arg(beta).
double effective_phase(cd alpha, cd beta, double theta, double c_eigenvalue);

/// The eight-operator loop D(-beta) R(theta C) D(-alpha) R(-theta C) D(beta) R(theta C) D(alpha) R(-theta C),
/// listed in time order.
std::vector<FieldOp> loop_sequence(cd alpha, cd beta, double theta, Coupler c = Coupler::Spins);

/// D(beta/2) R(pi a^dag a |1><1|) D(-beta/2) R(-pi a^dag a |1><1|), time order.
std::vector<FieldOp> controlled_displacement(cd beta);

struct GeoGateParams {
    int m = 1;
    cd alpha{0.0};
    cd beta{0.0};
    double kappa_over_g = 0.0;

    double phi() const;
};

/// e^{-3 pi k/4} + e^{-pi k/4}.
double decay_envelope(double kappa_over_g);

/// Rotation angle realized by the decaying sequence: |alpha|^2 (e^{-3 pi k/4} + e^{-pi k/4}).
double chi_effective(double alpha_mag, double kappa_over_g);

/// |alpha| with chi_effective(|alpha|, k) = |chi|.
double calibrate_amplitude(double chi, double kappa_over_g);

/// Amplitudes and phase that realize exp(-i chi S^z_C) for m spins.
GeoGateParams calibrated_params(int m, double chi, double kappa_over_g);

/// Sign s in the "deph" formula produced by the relative phase of `p`.
int dephasing_sign(const GeoGateParams &p);

/// Sign sigma in exp(-i sigma chi_eff S^z_C) produced by the relative phase of `p`.
int rotation_direction(const GeoGateParams &p);

/// The seven-step gate, time order: D(alpha), leg(+g), D(beta), leg(-g), D(-alpha e^{-k tau}),
/// leg(+g), D(-beta e^{-k tau}).
std::vector<FieldOp> gate_sequence(const GeoGateParams &p);

/// Ancilla-assisted S^z_C measurement: thirteen field operations in time order, |alpha beta| = pi/4.
std::vector<FieldOp> measurement_sequence(int m);

/// f(m) = (-1)^{m/2} (m even), (-1)^{(m-1)/2} (m odd).
int measurement_sign(int m);

struct SzOutcome {
    double p_plus;
    double p_minus;
};
SzOutcome measure_sz_protocol(int m, double sz_expectation);

/// Closed-form dephasing factor for the pair (M, M'). Odd m uses M -> (2M-1)/2.
cd dephasing_factor(HalfInt mj, HalfInt mjp, double alpha_mag, double kappa_over_g, bool m_odd, int sign);

/// Runs |M><M'| (x) |0><0| through `seq` with the coherent kernels; spins only.
lindblad::CoherentPair propagate_sequence(HalfInt mj, HalfInt mjp, const std::vector<FieldOp> &seq,
                                          double kappa_over_g);

/// Dephasing factor obtained by composing kernels along gate_sequence(p), target phase removed.
cd dephasing_factor_composed(HalfInt mj, HalfInt mjp, const GeoGateParams &p);

fidelity::CoefficientTable coefficient_table(int m, double chi, double kappa_over_g);

double process_fidelity_geo(int m, double chi, double kappa_over_g);

/// 1 - 4 pi chi k / (e^{-3 pi k/4} + e^{-pi k/4}).
double lower_bound_geo(double chi, double kappa_over_g);

/// 1 - (4 pi chi k / 2)(1 + pi k / 2).
double lower_bound_geo_loose(double chi, double kappa_over_g);

/// Second-order expansion of Re R in x = kappa/2|g|; diagonal pairs return 1.
double series_re_r_geo(HalfInt mj, HalfInt mjp, double alpha_mag, double kappa_over_g, bool m_odd, int sign);

/// Amplitudes (alpha, beta) with phi = pi so that the loop with C = X (eigenvalues +-1),
/// theta = pi/2, equals exp(i theta_rot X).
std::pair<cd, cd> rotation_amplitudes(double theta_rot);

}  // namespace cavity::geo_phase

#endif
