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

#ifndef CAVITY_DETECTOR_HPP
#define CAVITY_DETECTOR_HPP

#include <cstdint>
#include <vector>

#include "cavity/common.hpp"
#include "cavity/fidelity.hpp"
#include "cavity/lindblad.hpp"

namespace cavity::detector {

// Units as in photon_gate: |g| = 1, tau = pi/2, rates in units of |g|.

enum class Probe { Standard, Biased };

/// How a round's success probability is averaged over the click time.
///   Physical     - probability of no click during the whole round, p_null(tau).
///   TimeAveraged - p_null(t) averaged uniformly over t in [0, tau].
enum class RoundMeasure { Physical, TimeAveraged };

/// Probe amplitudes (c0, c1) on |0>, |1>.
struct ProbeState {
    double c0;
    double c1;
};
ProbeState probe_state(Probe probe, double kappa_over_g);

/// Normalized no-click conditional block after time t.
lindblad::FockBlock null_block(HalfInt mj, HalfInt mjp, double t, double kappa_over_g, Probe probe);

/// e^{-i 2g (M - M') t}, the phase left on |M><M'| by a click at time t.
cd click_phase(HalfInt mj, HalfInt mjp, double t);

/// Phase applied to |M><M'| by W_corr(t) = e^{i 2g t J^z}.
cd correction_phase(HalfInt mj, HalfInt mjp, double t);

struct RoundProbabilities {
    double p_null;
    double p_det;
};
RoundProbabilities round_probabilities(double t, double kappa_over_g, Probe probe);

/// Success probability of a single round.
double round_success(double kappa_over_g, Probe probe, RoundMeasure measure = RoundMeasure::Physical);

/// Smallest m_max with tail (1-a)^{m_max} < 1e-10.
int tail_cutoff(double success);

/// p_1 .. p_{m_max}; m_max = 0 selects tail_cutoff.
std::vector<double> success_distribution(double kappa_over_g, Probe probe, int m_max = 0,
                                         RoundMeasure measure = RoundMeasure::Physical);

/// Gate-time statistics; times in units of 1/|g|.
struct GateTimeStats {
    double tau;
    double mean;
    double std;
    std::vector<double> distribution;
};
GateTimeStats gate_time_stats(double kappa_over_g, Probe probe, RoundMeasure measure = RoundMeasure::Physical);

/// Process fidelity with the detector; the biased probe gives exactly 1.
double fidelity_with_detector(double chi, double kappa_over_g, Probe probe);

/// 1 - (pi^2 kappa^2 / 64 g^2) sin^2(2 chi).
double fidelity_with_detector_series(double chi, double kappa_over_g);

/// Per-sector coefficient R of the accepted (no-click) branch after measurement and correction.
cd null_branch_r_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g, Probe probe);
fidelity::CoefficientTable null_branch_table(int m, double chi, double kappa_over_g, Probe probe);

// ---------------------------------------------------------------------------
// Trajectory simulation of the full repeat-until-success protocol.

struct ProtocolSimConfig {
    int m_sub = 2;
    double chi = kPi / 4.0;
    double kappa_over_g = 0.1;
    Probe probe = Probe::Standard;
    std::size_t runs = 10000;
    std::uint64_t seed = 1;
    int max_rounds = 100000;
};

struct ProtocolSimResult {
    std::size_t runs = 0;
    std::size_t unfinished = 0;
    double fidelity_mean = 0.0;
    double fidelity_se = 0.0;
    double rounds_mean = 0.0;
    double rounds_se = 0.0;
    double gate_time_mean = 0.0;
    double gate_time_se = 0.0;
    double gate_time_std = 0.0;
    std::vector<std::uint64_t> round_histogram;  // index r-1 counts runs finishing in round r
    std::vector<double> click_times;             // in trajectory order
};

/// Parallel over trajectories; bit-identical to serial::simulate_protocol for the same config.
ProtocolSimResult simulate_protocol(const ProtocolSimConfig &cfg);

namespace serial {

ProtocolSimResult simulate_protocol(const ProtocolSimConfig &cfg);

}  // namespace serial

}  // namespace cavity::detector

#endif
