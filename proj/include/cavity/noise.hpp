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

#ifndef CAVITY_NOISE_HPP
#define CAVITY_NOISE_HPP

#include <Eigen/Dense>
#include <vector>

#include "cavity/common.hpp"

namespace cavity::noise {

struct DepolarizationParams {
    double p = 0.0;
    double gamma = 0.0;
    double gamma_eff = 0.0;
    double n_bar = 1.0;
    double g_over_delta = 0.0;

    /// p = 1 - e^{-gamma t}.
    static DepolarizationParams collective(double gamma, double t);
    /// gamma_eff = gamma n_bar (g/Delta)^2, p = 1 - e^{-gamma_eff t}.
    static DepolarizationParams independent(double gamma, double n_bar, double g_over_delta, double t);

    void validate() const;
};

/// 2^{-2m} sum_J (c^m_J)^2, evaluated exactly.
double collective_tail(int m);

/// (1 - p) F_gate + p 2^{-2m} sum_J (c^m_J)^2.
double collective_fidelity(double p, int m, double f_gate);

struct IndependentBound {
    double value;
    bool perturbative;  // m p <= 0.2
};

/// (1 - m p) F_gate floored at 0.
IndependentBound independent_bound(double p, int m, double f_gate);

/// Orthonormal |Lambda, J, M> basis of m_sub qubits (columns), ordered by J descending, then copy, then M descending.
struct CollectiveBasis {
    Eigen::MatrixXcd vectors;
    std::vector<HalfInt> j;
    std::vector<HalfInt> mj;
    std::vector<int> copy;
};
CollectiveBasis collective_basis(int m_sub);

/// (1 - p) rho + p T(rho), T the SU(2) twirl: within each J, coherences between copies are kept and
/// the spin factor is replaced by 1/(2J+1).
Eigen::MatrixXcd apply_collective(const Eigen::MatrixXcd &rho, int m_sub, double p);

/// (1 - m p) rho + p sum_k Tr_k(rho) (x) 1/2 on qubit k.
Eigen::MatrixXcd apply_independent(const Eigen::MatrixXcd &rho, int m_sub, double p);

/// Collective spin operators J^x, J^y, J^z on m_sub qubits (bit q set = spin down on qubit q).
struct CollectiveSpin {
    Eigen::MatrixXcd jx, jy, jz;
};
CollectiveSpin collective_spin(int m_sub);

}  // namespace cavity::noise

#endif
