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

#include "cavity/sweep.hpp"

#include <charconv>
#include <cmath>

#include "cavity/detector.hpp"
#include "cavity/fidelity.hpp"
#include "cavity/geo_phase.hpp"
#include "cavity/noise.hpp"
#include "cavity/photon_gate.hpp"

namespace cavity::sweep {

namespace {

std::vector<std::string> split(const std::string &s, char sep) {
    // Keeps empty fields, including a trailing one, so "4," is rejected rather than read as "4".
    std::vector<std::string> parts;
    std::size_t begin = 0;
    for (std::size_t pos = s.find(sep); pos != std::string::npos; pos = s.find(sep, begin)) {
        parts.push_back(s.substr(begin, pos - begin));
        begin = pos + 1;
    }
    if (!s.empty()) {
        parts.push_back(s.substr(begin));
    }
    return parts;
}

double to_double(const std::string &s) {
    double v = 0.0;
    auto first = s.data();
    auto last = s.data() + s.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && last[-1] == ' ') --last;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last) {
        throw DomainError("not a number: '" + s + "'");
    }
    return v;
}

SweepRow compute_row(const SweepConfig &cfg, int m, double k) {
    double f = 0.0;
    double bound = 0.0;
    switch (cfg.protocol) {
        case Protocol::SinglePhoton:
            f = photon_gate::process_fidelity_single_photon(m, cfg.chi, k);
            bound = photon_gate::lower_bound_single_photon(k);
            break;
        case Protocol::Detector:
        case Protocol::DetectorBiased: {
            auto probe = cfg.protocol == Protocol::Detector ? detector::Probe::Standard : detector::Probe::Biased;
            f = fidelity::process_fidelity(detector::null_branch_table(m, cfg.chi, k, probe));
            bound = detector::fidelity_with_detector(cfg.chi, k, probe);
            break;
        }
        case Protocol::GeoPhase:
            f = geo_phase::process_fidelity_geo(m, cfg.chi, k);
            bound = geo_phase::lower_bound_geo(std::abs(cfg.chi), k);
            break;
    }
    if (cfg.p) {
        if (cfg.depolarization == Depolarization::Collective) {
            f = noise::collective_fidelity(*cfg.p, m, f);
            bound = noise::collective_fidelity(*cfg.p, m, bound);
        } else {
            f = noise::independent_bound(*cfg.p, m, f).value;
            bound = noise::independent_bound(*cfg.p, m, bound).value;
        }
    }
    double f_ave = fidelity::average_fidelity(fidelity::clamp_for_report(f), std::ldexp(1.0, m));
    return {cfg.protocol, m, cfg.chi, k, f, bound, f_ave};
}

}  // namespace

Protocol parse_protocol(const std::string &name) {
    if (name == "single-photon") return Protocol::SinglePhoton;
    if (name == "detector") return Protocol::Detector;
    if (name == "detector-biased") return Protocol::DetectorBiased;
    if (name == "geo-phase") return Protocol::GeoPhase;
    throw DomainError("unknown protocol '" + name + "'");
}

std::string protocol_name(Protocol p) {
    switch (p) {
        case Protocol::SinglePhoton:
            return "single-photon";
        case Protocol::Detector:
            return "detector";
        case Protocol::DetectorBiased:
            return "detector-biased";
        case Protocol::GeoPhase:
            return "geo-phase";
    }
    return "unknown";
}

Depolarization parse_depolarization(const std::string &name) {
    if (name == "collective") return Depolarization::Collective;
    if (name == "independent") return Depolarization::Independent;
    throw DomainError("unknown depolarization model '" + name + "'");
}

std::vector<double> parse_grid(const std::string &text) {
    auto range = split(text, ':');
    std::vector<double> pts;
    if (range.size() == 3) {
        double start = to_double(range[0]);
        double stop = to_double(range[1]);
        double step = to_double(range[2]);
        if (!(step > 0.0) || !(stop >= start) || !std::isfinite(start) || !std::isfinite(stop)) {
            throw DomainError("grid needs start <= stop and step > 0");
        }
        double span = (stop - start) / step;
        auto count = static_cast<long long>(std::floor(span * (1.0 + 1e-9) + 1e-9)) + 1;
        if (count > 10'000'000) {
            throw DomainError("grid has too many points");
        }
        for (long long i = 0; i < count; ++i) {
            pts.push_back(start + static_cast<double>(i) * step);
        }
        return pts;
    }
    if (range.size() != 1) {
        throw DomainError("grid must be start:stop:step, a value or a comma list");
    }
    for (const auto &v : split(text, ',')) {
        pts.push_back(to_double(v));
    }
    if (pts.empty()) {
        throw DomainError("empty grid");
    }
    return pts;
}

std::vector<int> parse_int_list(const std::string &text) {
    std::vector<int> out;
    for (const auto &v : split(text, ',')) {
        int x = 0;
        auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
        if (ec != std::errc() || ptr != v.data() + v.size() || v.empty() || x < 1) {
            throw DomainError("not a positive integer: '" + v + "'");
        }
        out.push_back(x);
    }
    if (out.empty()) {
        throw DomainError("empty integer list");
    }
    return out;
}

void SweepConfig::validate() const {
    if (m.empty() || kappa_over_g.empty()) {
        throw DomainError("sweep needs at least one m and one grid point");
    }
    for (int v : m) {
        if (v < 1) throw DomainError("m must be >= 1");
    }
    for (double k : kappa_over_g) {
        if (!(k >= 0.0) || !std::isfinite(k)) throw DomainError("kappa/g must be finite and >= 0");
    }
    if (!(chi > -kPi && chi <= kPi)) {
        throw DomainError("chi must lie in (-pi, pi]");
    }
    if (p && !(*p >= 0.0 && *p <= 1.0)) {
        throw DomainError("p must lie in [0, 1]");
    }
}

std::vector<SweepRow> run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    const auto nk = static_cast<std::int64_t>(cfg.kappa_over_g.size());
    const auto total = static_cast<std::int64_t>(cfg.m.size()) * nk;
    std::vector<SweepRow> rows(static_cast<std::size_t>(total));
    // Rows land in their grid slot, so completion order never affects output.
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t r = 0; r < total; ++r) {
        rows[static_cast<std::size_t>(r)] = compute_row(cfg, cfg.m[r / nk], cfg.kappa_over_g[r % nk]);
    }
    return rows;
}

namespace serial {

std::vector<SweepRow> run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    std::vector<SweepRow> rows;
    for (int m : cfg.m) {
        for (double k : cfg.kappa_over_g) {
            rows.push_back(compute_row(cfg, m, k));
        }
    }
    return rows;
}

}  // namespace serial

std::string format_double(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec != std::errc()) {
        throw std::runtime_error("double formatting failed");
    }
    return std::string(buf, ptr);
}

void write_csv(std::ostream &out, const std::vector<SweepRow> &rows) {
    out << "protocol,m,chi,kappa_over_g,F_pro,F_lower_bound,F_ave\n";
    for (const auto &r : rows) {
        out << protocol_name(r.protocol) << ',' << r.m << ',' << format_double(r.chi) << ','
            << format_double(r.kappa_over_g) << ',' << format_double(r.f_pro) << ','
            << format_double(r.f_lower_bound) << ',' << format_double(r.f_ave) << '\n';
    }
}

}  // namespace cavity::sweep
