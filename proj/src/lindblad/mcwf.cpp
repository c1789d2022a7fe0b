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

#include <cmath>

#include "cavity/lindblad.hpp"

namespace cavity::lindblad {

TrajectoryStepper::TrajectoryStepper(const DispersiveSystem &sys) : sys_(sys) {
    photons_.resize(sys.dim());
    energy_.resize(sys.dim());
    for (std::size_t lv = 0; lv < sys.levels.size(); ++lv) {
        for (int n = 0; n <= sys.nmax; ++n) {
            std::size_t a = sys.index(lv, n);
            photons_[a] = n;
            energy_[a] = sys.g * sys.levels[lv] * n;
        }
    }
}

double TrajectoryStepper::norm2_after(const Eigen::VectorXcd &psi, double t) const {
    double s = 0.0;
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
        s += std::norm(psi(a)) * std::exp(-sys_.kappa * photons_[a] * t);
    }
    return s;
}

void TrajectoryStepper::propagate(Eigen::VectorXcd &psi, double t) const {
    for (Eigen::Index a = 0; a < psi.size(); ++a) {
        psi(a) *= std::exp(cd{-0.5 * sys_.kappa * photons_[a] * t, -energy_[a] * t});
    }
}

void TrajectoryStepper::jump(Eigen::VectorXcd &psi) const {
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(psi.size());
    for (std::size_t lv = 0; lv < sys_.levels.size(); ++lv) {
        for (int n = 1; n <= sys_.nmax; ++n) {
            out(static_cast<Eigen::Index>(sys_.index(lv, n - 1))) =
                std::sqrt(static_cast<double>(n)) * psi(static_cast<Eigen::Index>(sys_.index(lv, n)));
        }
    }
    psi = out / out.norm();
}

std::optional<double> TrajectoryStepper::advance(Eigen::VectorXcd &psi, double duration, std::mt19937_64 &rng) const {
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double r = unif(rng);
    if (sys_.kappa == 0.0 || norm2_after(psi, duration) > r) {
        propagate(psi, duration);
        psi /= psi.norm();
        return std::nullopt;
    }
    double lo = 0.0;
    double hi = duration;
    for (int it = 0; it < 200 && hi - lo > 1e-14 * duration; ++it) {
        double mid = 0.5 * (lo + hi);
        if (norm2_after(psi, mid) > r) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    double tj = 0.5 * (lo + hi);
    propagate(psi, tj);
    jump(psi);
    return tj;
}

TrajectoryRecord mcwf_run(const Eigen::VectorXcd &psi0, const DispersiveSystem &sys, std::uint64_t seed,
                          double t_max) {
    if (psi0.size() != static_cast<Eigen::Index>(sys.dim())) {
        throw DomainError("initial state does not match the system dimension");
    }
    std::mt19937_64 rng(seed);
    TrajectoryStepper stepper(sys);
    TrajectoryRecord rec;
    rec.final_state = psi0 / psi0.norm();
    double elapsed = 0.0;
    while (elapsed < t_max) {
        auto tj = stepper.advance(rec.final_state, t_max - elapsed, rng);
        if (!tj) {
            break;
        }
        elapsed += *tj;
        rec.jump_times.push_back(elapsed);
    }
    return rec;
}

}  // namespace cavity::lindblad
