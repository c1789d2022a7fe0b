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

#ifndef CAVITY_SWEEP_HPP
#define CAVITY_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cavity/common.hpp"

namespace cavity::sweep {

enum class Protocol { SinglePhoton, Detector, DetectorBiased, GeoPhase };
enum class Depolarization { Collective, Independent };

/// Throws DomainError for an unknown name.
Protocol parse_protocol(const std::string &name);
std::string protocol_name(Protocol p);
Depolarization parse_depolarization(const std::string &name);

/// "start:stop:step", a single value, or a comma list. Points are start + i step, stop included
/// up to a 1e-9 relative slack.
std::vector<double> parse_grid(const std::string &text);

/// Comma-separated positive integers.
std::vector<int> parse_int_list(const std::string &text);

struct SweepConfig {
    Protocol protocol = Protocol::SinglePhoton;
    std::vector<int> m{1};
    double chi = kPi / 4.0;
    std::vector<double> kappa_over_g{0.0};
    std::optional<double> p;
    Depolarization depolarization = Depolarization::Collective;
    std::uint64_t seed = 0;  // closed forms are deterministic; kept for a uniform interface

    void validate() const;
};

struct SweepRow {
    Protocol protocol;
    int m;
    double chi;
    double kappa_over_g;
    double f_pro;
    double f_lower_bound;
    double f_ave;
};

/// One row per (m, kappa) in m-major grid order.
///   single-photon   - bound 1 - (pi/2)(kappa/2g)
///   geo-phase       - bound 1 - 4 pi chi k / (e^{-3 pi k/4} + e^{-pi k/4}), chi calibrated
///   detector(-biased) - the bound column carries the closed-form accepted-branch fidelity
/// With p set, both fidelity columns pass through the chosen depolarization map.
std::vector<SweepRow> run_sweep(const SweepConfig &cfg);

namespace serial {
std::vector<SweepRow> run_sweep(const SweepConfig &cfg);
}

/// Header plus one line per row; doubles printed with %.17g.
void write_csv(std::ostream &out, const std::vector<SweepRow> &rows);

/// %.17g formatting, locale independent.
std::string format_double(double v);

}  // namespace cavity::sweep

#endif
