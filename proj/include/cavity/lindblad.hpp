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

#ifndef CAVITY_LINDBLAD_HPP
#define CAVITY_LINDBLAD_HPP

#include <Eigen/Dense>
#include <optional>
#include <random>
#include <vector>

#include "cavity/common.hpp"

namespace cavity::lindblad {

/// Dispersive coupling g (sign carrying), field decay rate kappa, duration t.
struct DecayParams {
    double g = 1.0;
    double kappa = 0.0;
    double t = 0.0;

    void validate() const;
};

/// b_{M,M'}(t) = kappa (1 - e^{-[kappa + i2g(M-M')]t}) / (kappa + i2g(M-M')).
cd b_coeff(const DecayParams &p, HalfInt mj, HalfInt mjp);

/// Field part of |M><M'| (x) (field operator on span{|0>,|1>}).
struct FockBlock {
    HalfInt mj;
    HalfInt mjp;
    cd e00{0.0};
    cd e01{0.0};
    cd e10{0.0};
    cd e11{0.0};

    /// |psi><psi| with psi = c0|0> + c1|1>.
    static FockBlock outer(HalfInt mj, HalfInt mjp, cd c0, cd c1);

    FockBlock operator+(const FockBlock &o) const;
    FockBlock operator*(cd s) const;
};

/// Closed-form solution of the master equation on one sector pair, Fock truncation {0,1}.
FockBlock evolve_fock_block(const FockBlock &block, const DecayParams &p);

/// Sector pair carrying |alpha><beta| on the field with scalar weight.
struct CoherentPair {
    HalfInt mj;
    HalfInt mjp;
    cd alpha{0.0};
    cd beta{0.0};
    cd weight{1.0};
};

/// Closed-form evolution of a coherent-state basis element; the returned weight
/// is the input weight times e^{d(t)}.
CoherentPair coherent_weight(const CoherentPair &in, const DecayParams &p);

/// d(t) built from b_coeff.
cd coherent_exponent(cd alpha, cd beta, const DecayParams &p, HalfInt mj, HalfInt mjp);

/// c(t) from the characteristics solution; d = c - (1-e^{-kt})(|a|^2+|b|^2-2ab*)/2.
cd characteristic_c(cd alpha, cd beta, const DecayParams &p, HalfInt mj, HalfInt mjp);

// ---------------------------------------------------------------------------
// Dense oracles.

/// Register of spin levels coupled as H = g a^dag a (x) diag(levels), truncated Fock space {0..nmax}.
/// For spins the level of a J^z eigenstate is 2 M_J.
struct DispersiveSystem {
    std::vector<double> levels;
    double g = 1.0;
    double kappa = 0.0;
    int nmax = 1;

    std::size_t dim() const {
        return levels.size() * static_cast<std::size_t>(nmax + 1);
    }
    std::size_t index(std::size_t s, int n) const {
        return s * static_cast<std::size_t>(nmax + 1) + static_cast<std::size_t>(n);
    }

    /// All 2^m_sub computational states; bit q set means qubit q is spin down.
    static DispersiveSystem qubits(int m_sub, double g, double kappa, int nmax);
    /// The J^z eigenstates of one sector pair (one level when equal).
    static DispersiveSystem sector_pair(HalfInt mj, HalfInt mjp, double g, double kappa, int nmax);
};

/// 2 M_J of computational basis state `s` on m_sub qubits.
int twice_mz(int m_sub, std::size_t s);

/// Fock cutoff for coherent amplitudes up to `max_abs`.
int coherent_cutoff(double max_abs);

struct IntegratorOptions {
    double step = 0.0;  // 0 selects 1e-3 / max(|g|, kappa, 1)
    // Coherent-state runs: abort when the top Fock level holds more than leakage_tol.
    // The generator never raises photon number, so only the input can leak.
    bool monitor_leakage = false;
    double leakage_tol = 1e-8;
};

/// Fixed-step RK4 integration of the master equation with jump operator sqrt(kappa) a.
/// Works for any operator (not only density matrices), since the generator is linear.
Eigen::MatrixXcd integrate_master(const Eigen::MatrixXcd &rho0, const DispersiveSystem &sys, double t,
                                  const IntegratorOptions &opts = {});

/// Population in the top Fock level.
double top_level_population(const Eigen::MatrixXcd &rho, const DispersiveSystem &sys);

/// Truncated coherent-state amplitudes <n|alpha>, n = 0..nmax.
Eigen::VectorXcd coherent_amplitudes(cd alpha, int nmax);

struct TrajectoryRecord {
    std::vector<double> jump_times;
    Eigen::VectorXcd final_state;
};

/// Quantum-jump propagation under H_eff = H - i kappa/2 a^dag a. H_eff is diagonal, so
/// propagation between jumps is exact and jump times are located by bisection on the norm.
class TrajectoryStepper {
   public:
    explicit TrajectoryStepper(const DispersiveSystem &sys);

    /// Evolve a normalized state for at most `duration`. Stops at the first jump, applies it,
    /// and returns its time; otherwise returns nullopt. `psi` is normalized on return.
    std::optional<double> advance(Eigen::VectorXcd &psi, double duration, std::mt19937_64 &rng) const;

    /// No-jump propagation (unnormalized).
    void propagate(Eigen::VectorXcd &psi, double t) const;

    /// Applies a and normalizes.
    void jump(Eigen::VectorXcd &psi) const;

   private:
    double norm2_after(const Eigen::VectorXcd &psi, double t) const;

    const DispersiveSystem &sys_;
    std::vector<double> photons_;
    std::vector<double> energy_;
};

/// One trajectory from psi0 over [0, t_max].
TrajectoryRecord mcwf_run(const Eigen::VectorXcd &psi0, const DispersiveSystem &sys, std::uint64_t seed,
                          double t_max);

}  // namespace cavity::lindblad

#endif
