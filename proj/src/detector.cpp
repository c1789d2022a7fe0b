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

#include "cavity/detector.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cavity/photon_gate.hpp"
#include "detail/kahan.hpp"

namespace cavity::detector {

namespace {

constexpr cd I{0.0, 1.0};
constexpr double kTau = kPi / 2.0;

void check_kappa(double k) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw DomainError("kappa/g must be finite and >= 0");
    }
}

// y = pi kappa / 2|g| = kappa tau.
double loss_exponent(double k) {
    return k * kTau;
}

}  // namespace

ProbeState probe_state(Probe probe, double kappa_over_g) {
    check_kappa(kappa_over_g);
    if (probe == Probe::Standard) {
        return {std::sqrt(0.5), std::sqrt(0.5)};
    }
    double y = loss_exponent(kappa_over_g);
    // 1/sqrt(1+e^y) and e^{y/2}/sqrt(1+e^y), written to avoid overflow.
    double c1 = 1.0 / std::sqrt(1.0 + std::exp(-y));
    double c0 = std::exp(-0.5 * y) * c1;
    return {c0, c1};
}

lindblad::FockBlock null_block(HalfInt mj, HalfInt mjp, double t, double kappa_over_g, Probe probe) {
    if (t < 0.0 || t > kTau * (1.0 + 1e-12)) {
        throw DomainError("null_block time must lie in [0, tau]");
    }
    ProbeState ps = probe_state(probe, kappa_over_g);
    lindblad::FockBlock start = lindblad::FockBlock::outer(mj, mjp, ps.c0, ps.c1);
    lindblad::FockBlock b = start;
    b.e01 = start.e01 * std::exp((I * 2.0 * mjp.value() - kappa_over_g / 2.0) * t);
    b.e10 = start.e10 * std::exp((-I * 2.0 * mj.value() - kappa_over_g / 2.0) * t);
    b.e11 = start.e11 * std::exp((-I * 2.0 * (mj - mjp).value() - kappa_over_g) * t);
    return b * (1.0 / round_probabilities(t, kappa_over_g, probe).p_null);
}

cd click_phase(HalfInt mj, HalfInt mjp, double t) {
    return std::exp(-I * 2.0 * (mj - mjp).value() * t);
}

cd correction_phase(HalfInt mj, HalfInt mjp, double t) {
    return std::exp(I * 2.0 * (mj - mjp).value() * t);
}

RoundProbabilities round_probabilities(double t, double kappa_over_g, Probe probe) {
    ProbeState ps = probe_state(probe, kappa_over_g);
    double p_null = ps.c0 * ps.c0 + ps.c1 * ps.c1 * std::exp(-kappa_over_g * t);
    return {p_null, 1.0 - p_null};
}

double round_success(double kappa_over_g, Probe probe, RoundMeasure measure) {
    check_kappa(kappa_over_g);
    double y = loss_exponent(kappa_over_g);
    if (measure == RoundMeasure::Physical) {
        return round_probabilities(kTau, kappa_over_g, probe).p_null;
    }
    if (y == 0.0) {
        return 1.0;
    }
    if (probe == Probe::Standard) {
        // (y + 1 - e^{-y}) / 2y
        return (y - std::expm1(-y)) / (2.0 * y);
    }
    // (y + e^y - 1) / (y (1 + e^y)), rewritten with e^{-y}.
    double e = std::exp(-y);
    return (y * e - std::expm1(-y)) / (y * (1.0 + e));
}

int tail_cutoff(double success) {
    if (success >= 1.0) {
        return 1;
    }
    if (success <= 0.0) {
        throw DomainError("round success probability must be positive");
    }
    return std::max(1, static_cast<int>(std::ceil(std::log(1e-10) / std::log1p(-success))));
}

std::vector<double> success_distribution(double kappa_over_g, Probe probe, int m_max, RoundMeasure measure) {
    double a = round_success(kappa_over_g, probe, measure);
    if (m_max <= 0) {
        m_max = tail_cutoff(a);
    }
    std::vector<double> p(static_cast<std::size_t>(m_max));
    double fail = 1.0;
    for (auto &v : p) {
        v = a * fail;
        fail *= 1.0 - a;
    }
    return p;
}

GateTimeStats gate_time_stats(double kappa_over_g, Probe probe, RoundMeasure measure) {
    double a = round_success(kappa_over_g, probe, measure);
    GateTimeStats s;
    s.tau = kTau;
    s.mean = kTau / a;
    s.std = kTau * std::sqrt(std::max(0.0, 1.0 - a)) / a;
    s.distribution = success_distribution(kappa_over_g, probe, 0, measure);
    return s;
}

double fidelity_with_detector(double chi, double kappa_over_g, Probe probe) {
    check_kappa(kappa_over_g);
    if (probe == Probe::Biased) {
        return 1.0;
    }
    double y = loss_exponent(kappa_over_g);
    double s2 = std::sin(2.0 * chi);
    double c2 = std::cos(2.0 * chi);
    // 2 e^{y/2} / (1 + e^y) = 1 / cosh(y/2)
    return 0.5 * (1.0 + c2 * c2 + s2 * s2 / std::cosh(0.5 * y));
}

double fidelity_with_detector_series(double chi, double kappa_over_g) {
    double s2 = std::sin(2.0 * chi);
    return 1.0 - (kPi * kPi * kappa_over_g * kappa_over_g / 64.0) * s2 * s2;
}

cd null_branch_r_coeff(int m, HalfInt mj, HalfInt mjp, double chi, double kappa_over_g, Probe probe) {
    ProbeState ps = probe_state(probe, kappa_over_g);
    double s = photon_gate::parity_eigenvalue(m, mj);
    double sp = photon_gate::parity_eigenvalue(m, mjp);
    double eps = std::exp(-0.5 * loss_exponent(kappa_over_g));
    cd z = -I * s;
    cd zp = I * sp;
    double c = std::cos(chi);
    double sn = std::sin(chi);
    double q0 = ps.c0 * ps.c0;
    double q01 = ps.c0 * ps.c1 * eps;
    double q1 = ps.c1 * ps.c1 * eps * eps;
    cd plus = q0 * c * c + q01 * c * sn * (z + zp) + q1 * sn * sn * z * zp;
    cd minus = q0 * sn * sn - q01 * c * sn * (z + zp) + q1 * c * c * z * zp;
    cd q = (plus + s * sp * minus) / (q0 + q1);
    return q * std::conj(photon_gate::v_coeff(m, mj, mjp, chi));
}

fidelity::CoefficientTable null_branch_table(int m, double chi, double kappa_over_g, Probe probe) {
    return fidelity::CoefficientTable::build(
        m, [&](HalfInt a, HalfInt b) { return null_branch_r_coeff(m, a, b, chi, kappa_over_g, probe); });
}

// ---------------------------------------------------------------------------

namespace {

struct TrajectoryOutcome {
    int rounds = 0;
    bool finished = false;
    double fidelity = 0.0;
    std::vector<double> clicks;
};

// Register of (reference copy) x (spins); the reference is untouched and carries the Choi state.
struct ProtocolModel {
    ProtocolSimConfig cfg;
    lindblad::DispersiveSystem sys;
    std::size_t spin_dim;
    std::vector<double> parity;
    std::vector<double> level;
    ProbeState probe;
    cd mu_conj;
    Eigen::VectorXcd target;  // (1 (x) U)|Phi+>

    explicit ProtocolModel(const ProtocolSimConfig &c) : cfg(c) {
        if (c.m_sub < 1 || c.m_sub > 4) {
            throw DomainError("protocol simulation supports 1 <= m_sub <= 4");
        }
        check_kappa(c.kappa_over_g);
        spin_dim = std::size_t{1} << c.m_sub;
        std::size_t reg = spin_dim * spin_dim;
        sys.g = 1.0;
        sys.kappa = c.kappa_over_g;
        sys.nmax = 1;
        for (std::size_t r = 0; r < reg; ++r) {
            int tm = lindblad::twice_mz(c.m_sub, r % spin_dim);
            sys.levels.push_back(tm);
            level.push_back(tm);
            parity.push_back(((c.m_sub - tm) / 2) % 2 == 0 ? 1.0 : -1.0);
        }
        probe = probe_state(c.probe, c.kappa_over_g);
        mu_conj = std::conj(photon_gate::measurement_phase(c.m_sub));
        target = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(reg));
        double norm = 1.0 / std::sqrt(static_cast<double>(spin_dim));
        for (std::size_t s = 0; s < spin_dim; ++s) {
            std::size_t r = s * spin_dim + s;
            target(static_cast<Eigen::Index>(r)) = norm * std::exp(-I * c.chi * parity[r]);
        }
    }

    TrajectoryOutcome run(std::uint64_t index) const {
        std::mt19937_64 rng(derive_seed(cfg.seed, index));
        std::uniform_real_distribution<double> unif(0.0, 1.0);
        lindblad::TrajectoryStepper stepper(sys);
        const auto reg = static_cast<Eigen::Index>(level.size());
        Eigen::VectorXcd phi = Eigen::VectorXcd::Zero(reg);
        double norm = 1.0 / std::sqrt(static_cast<double>(spin_dim));
        for (std::size_t s = 0; s < spin_dim; ++s) {
            phi(static_cast<Eigen::Index>(s * spin_dim + s)) = norm;
        }
        Eigen::VectorXcd psi(2 * reg);
        TrajectoryOutcome out;
        double c = std::cos(cfg.chi);
        double sn = std::sin(cfg.chi);
        while (out.rounds < cfg.max_rounds) {
            ++out.rounds;
            for (Eigen::Index r = 0; r < reg; ++r) {
                psi(2 * r) = probe.c0 * phi(r);
                psi(2 * r + 1) = probe.c1 * phi(r);
            }
            auto click = stepper.advance(psi, kTau, rng);
            if (click) {
                out.clicks.push_back(*click);
                for (Eigen::Index r = 0; r < reg; ++r) {
                    phi(r) = psi(2 * r) * std::exp(I * (*click) * level[static_cast<std::size_t>(r)]);
                }
                phi /= phi.norm();
                continue;
            }
            Eigen::VectorXcd plus(reg);
            for (Eigen::Index r = 0; r < reg; ++r) {
                plus(r) = c * psi(2 * r) + mu_conj * sn * psi(2 * r + 1);
            }
            double p_plus = plus.squaredNorm();
            if (unif(rng) < p_plus) {
                phi = plus;
            } else {
                for (Eigen::Index r = 0; r < reg; ++r) {
                    phi(r) = (-sn * psi(2 * r) + mu_conj * c * psi(2 * r + 1)) * parity[static_cast<std::size_t>(r)];
                }
            }
            phi /= phi.norm();
            out.finished = true;
            out.fidelity = std::norm(target.dot(phi));
            break;
        }
        return out;
    }
};

ProtocolSimResult reduce(const ProtocolSimConfig &cfg, const std::vector<TrajectoryOutcome> &outs) {
    ProtocolSimResult res;
    res.runs = outs.size();
    detail::KahanSum f, f2, r, r2;
    std::size_t done = 0;
    for (const auto &o : outs) {
        res.click_times.insert(res.click_times.end(), o.clicks.begin(), o.clicks.end());
        if (!o.finished) {
            ++res.unfinished;
            continue;
        }
        ++done;
        f.add(o.fidelity);
        f2.add(o.fidelity * o.fidelity);
        r.add(o.rounds);
        r2.add(static_cast<double>(o.rounds) * o.rounds);
        if (res.round_histogram.size() < static_cast<std::size_t>(o.rounds)) {
            res.round_histogram.resize(static_cast<std::size_t>(o.rounds), 0);
        }
        ++res.round_histogram[static_cast<std::size_t>(o.rounds - 1)];
    }
    if (done == 0) {
        return res;
    }
    double n = static_cast<double>(done);
    auto spread = [n](double s, double s2) {
        double mean = s / n;
        double var = n > 1 ? std::max(0.0, (s2 - n * mean * mean) / (n - 1.0)) : 0.0;
        return std::pair{mean, std::sqrt(var)};
    };
    auto [fm, fs] = spread(f.sum, f2.sum);
    auto [rm, rs] = spread(r.sum, r2.sum);
    res.fidelity_mean = fm;
    res.fidelity_se = fs / std::sqrt(n);
    res.rounds_mean = rm;
    res.rounds_se = rs / std::sqrt(n);
    res.gate_time_mean = kTau * rm;
    res.gate_time_std = kTau * rs;
    res.gate_time_se = kTau * res.rounds_se;
    (void)cfg;
    return res;
}

}  // namespace

ProtocolSimResult simulate_protocol(const ProtocolSimConfig &cfg) {
    ProtocolModel model(cfg);
    std::vector<TrajectoryOutcome> outs(cfg.runs);
    const auto n = static_cast<long>(cfg.runs);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) {
        outs[static_cast<std::size_t>(i)] = model.run(static_cast<std::uint64_t>(i));
    }
    return reduce(cfg, outs);
}

namespace serial {

ProtocolSimResult simulate_protocol(const ProtocolSimConfig &cfg) {
    ProtocolModel model(cfg);
    std::vector<TrajectoryOutcome> outs;
    outs.reserve(cfg.runs);
    for (std::size_t i = 0; i < cfg.runs; ++i) {
        outs.push_back(model.run(i));
    }
    return reduce(cfg, outs);
}

}  // namespace serial

}  // namespace cavity::detector
