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

#ifndef CAVITY_PHOTON_GATE_HPP
#define CAVITY_PHOTON_GATE_HPP

#include "cavity/common.hpp"
#include "cavity/fidelity.hpp"

namespace cavity::photon_gate {

// Units: |g| = 1, interaction time tau = pi / 2, kappa given as kappa / |g|.

/// Target U = exp(-i chi S^z_C) on m spins; the measurement angle is fixed to chi.
struct GateTarget {
    int m = 1;
    double chi = 0.0;

    double theta_plus() const {
        return chi;
    }
    void validate() const;
};

/// Eigenvalue of S^z_C = prod sigma^z on the M_J eigenspace: (-1)^{m/2 - M_J}.
int parity_eigenvalue(int m, HalfInt mj);

/// Phase e^{i mu} of the |1> component of the measurement basis, (-i)^{m-1}.
cd measurement_phase(int m);

/// <M|U|M> <M'|U|M'>^*.
cd v_coeff(int m, HalfInt mj, HalfInt mjp, double chi);

/// Action of the noisy teleported gate on |M><M'|.
cd q_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g);

/// R = Q V^*.
cd r_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g);

struct OutcomeProbabilities {
    double p_plus;
    double p_minus;
};

/// p_+ - p_- = (1 - e^{-kappa tau}) cos(2 theta_plus).
OutcomeProbabilities noise_map_probabilities(double theta_plus, double kappa, double tau);

fidelity::CoefficientTable coefficient_table(const GateTarget &target, double kappa_over_g);

double process_fidelity_single_photon(int m, double chi, double kappa_over_g);

/// 1 - (pi/2)(kappa / 2|g|).
double lower_bound_single_photon(double kappa_over_g);

/// Second-order expansion of Re R in x = kappa / 2|g|. Diagonal pairs return 1.
double series_re_r(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g);

}  // namespace cavity::photon_gate

#endif
